#pragma once

// Filtered Barratt-Eccles simplicial sets F_t(WΣ_k).
//
// An l-simplex of WΣ_k is a string of l+1 permutations; it is non-degenerate
// when adjacent levels differ. The complexity-t stage keeps the strings in
// which every pair of labels changes relative order at most t-1 times.
// Enumerated tables are stored as rows of lexicographic permutation ranks, in
// lexicographic order, so a simplex's position doubles as its matrix column.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confobs/perm.hpp"

namespace confobs {

using PermRank = std::uint16_t;
using SimplexId = std::uint32_t;

struct Simplex {
    std::vector<Perm> levels;

    Simplex() = default;
    explicit Simplex(std::vector<Perm> lv) : levels(std::move(lv)) {}

    /// Parses "132|312|231".
    static Simplex parse(std::string_view text);

    int arity() const { return levels.empty() ? 0 : levels.front().arity(); }
    int degree() const { return static_cast<int>(levels.size()) - 1; }
    bool is_degenerate() const;
    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.levels <=> b.levels; }
};

/// Number of places where labels i and j change relative order along the string.
int swap_count(const Simplex& s, int i, int j);
bool in_filtration(const Simplex& s, int complexity);

struct Face {
    int position;
    std::optional<Simplex> simplex;  // nullopt: the face is degenerate
};
std::vector<Face> faces(const Simplex& s);

using LevelMap = std::function<Perm(const Perm&)>;
LevelMap pair_projection(int i, int j);
LevelMap triple_projection(int a, int b, int c);

/// Levelwise image; nullopt when two adjacent images coincide.
std::optional<Simplex> apply_map(const Simplex& s, const LevelMap& f);

/// Per-arity lookup data shared by the enumeration and cochain kernels.
struct ArityTables {
    int arity = 0;
    int pairs = 0;                          // k(k-1)/2
    std::vector<std::uint32_t> order_mask;  // bit p set: pair p is in reversed order
    std::vector<std::pair<int, int>> pair_labels;

    static const ArityTables& get(int k);
    int pair_index(int i, int j) const;  // i < j
};

/// True when every pair changes order at most complexity-1 times.
bool ranks_in_filtration(const ArityTables& at, int complexity, std::span<const PermRank> ranks);

class ComplexIndex {
  public:
    ComplexIndex(int arity, int complexity, int degree, std::vector<PermRank> flat);

    int arity() const { return arity_; }
    int complexity() const { return complexity_; }
    int degree() const { return degree_; }
    std::size_t size() const { return flat_.size() / width(); }
    std::size_t width() const { return static_cast<std::size_t>(degree_) + 1; }

    std::span<const PermRank> ranks(SimplexId id) const { return {flat_.data() + id * width(), width()}; }
    Simplex simplex(SimplexId id) const;

    std::optional<SimplexId> find(std::span<const PermRank> ranks) const;
    std::optional<SimplexId> find(const Simplex& s) const;

    const std::vector<PermRank>& flat() const { return flat_; }

  private:
    int arity_;
    int complexity_;
    int degree_;
    std::vector<PermRank> flat_;
};

/// Highest degree with non-degenerate simplices: (t-1)·k(k-1)/2.
int top_degree(int arity, int complexity);

/// All filtered non-degenerate simplices of one degree, in canonical order.
/// The search is split by first level across OpenMP threads.
ComplexIndex enumerate(int arity, int complexity, int degree);

/// Single-threaded depth-first reference for `enumerate`.
ComplexIndex enumerate_serial(int arity, int complexity, int degree);

/// Process-wide cache of enumerated tables; entries are immutable once built.
const ComplexIndex& complex_table(int arity, int complexity, int degree);

}  // namespace confobs
