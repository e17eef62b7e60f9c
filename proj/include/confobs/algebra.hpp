#pragma once

// The cohomology ring H*(F_k(R^2)) over F_2 (Arnold algebra), its Koszul dual
// YB_k (Yang-Baxter algebra), and the dual-bar model W = s(YB_k^+)^* with its
// coproduct. Both algebras use words in generators g_ij = g_ji (i < j).

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confobs/gf2.hpp"

namespace confobs {

/// An unordered label pair, stored with i < j.
struct Gen {
    int i = 0;
    int j = 0;

    static Gen of(int a, int b);
    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

using GenWord = std::vector<Gen>;

/// Finite F_2 linear combination, kept sorted with repeated terms cancelled.
template <class T>
class F2Sum {
  public:
    F2Sum() = default;
    F2Sum(std::initializer_list<T> terms) {
        for (const auto& t : terms) toggle(t);
    }

    void toggle(const T& t) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
        if (it != terms_.end() && *it == t)
            terms_.erase(it);
        else
            terms_.insert(it, t);
    }
    F2Sum& operator+=(const F2Sum& other) {
        for (const auto& t : other.terms_) toggle(t);
        return *this;
    }
    friend F2Sum operator+(F2Sum a, const F2Sum& b) { return a += b; }

    bool contains(const T& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<T>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    friend bool operator==(const F2Sum&, const F2Sum&) = default;

  private:
    std::vector<T> terms_;
};

/// Admissible Arnold monomial A_{i1 j1}...A_{il jl} with j1 < ... < jl.
struct ArnoldMonomial {
    GenWord factors;

    int degree() const { return static_cast<int>(factors.size()); }
    bool admissible() const;
    /// "A12.A23"; the unit prints as "1".
    std::string to_string() const;
    static ArnoldMonomial parse(std::string_view text);

    friend bool operator==(const ArnoldMonomial&, const ArnoldMonomial&) = default;
    friend auto operator<=>(const ArnoldMonomial&, const ArnoldMonomial&) = default;
};

/// Admissible Yang-Baxter word B_{i1 j1}...B_{il jl} with j1 <= ... <= jl.
struct YBWord {
    GenWord factors;

    int length() const { return static_cast<int>(factors.size()); }
    bool admissible() const;
    /// "B12.B23.B13"; the empty word prints as "1".
    std::string to_string() const;
    static YBWord parse(std::string_view text);

    friend bool operator==(const YBWord&, const YBWord&) = default;
    friend auto operator<=>(const YBWord&, const YBWord&) = default;
};

using ArnoldElement = F2Sum<ArnoldMonomial>;
using YBElement = F2Sum<YBWord>;

std::string to_string(const ArnoldElement& e);
std::string to_string(const YBElement& e);

/// Product of generators in H*(F_k), expanded in the admissible basis.
ArnoldElement arnold_normalize(const GenWord& raw);

/// Product of generators in YB_k, expanded in the admissible basis by
/// rewriting B_ij B_uv (j > v). Throws past kMaxRewriteSteps rewrites.
YBElement yb_normalize(const GenWord& raw);
inline constexpr long kMaxRewriteSteps = 1'000'000;

enum class AlgebraKind { Arnold, YangBaxter };

/// Admissible basis words of a given length, in canonical (lexicographic) order.
std::vector<GenWord> admissible_words(AlgebraKind kind, int arity, int length);
std::size_t dims(AlgebraKind kind, int arity, int length);

/// Canonical bases and multiplication of H*(F_k).
class ArnoldAlgebra {
  public:
    explicit ArnoldAlgebra(int arity);

    int arity() const { return arity_; }
    int top_degree() const { return arity_ - 1; }
    const std::vector<ArnoldMonomial>& basis(int degree) const;
    std::size_t dim(int degree) const { return basis(degree).size(); }
    int index_of(const ArnoldMonomial& m) const;

    gf2::BitVector to_bits(const ArnoldElement& e, int degree) const;
    ArnoldElement from_bits(const gf2::BitVector& v, int degree) const;

    /// Product of basis elements (degree q1, index a) · (degree q2, index b).
    const ArnoldElement& product(int q1, int a, int q2, int b) const;
    ArnoldElement multiply(const ArnoldElement& x, const ArnoldElement& y) const;

  private:
    int arity_;
    std::vector<std::vector<ArnoldMonomial>> basis_;
    std::map<ArnoldMonomial, int> index_;
    std::map<std::tuple<int, int, int, int>, ArnoldElement> products_;
};

/// Dual-bar generator s(word)^*; resolution level = length - 1, degree 1.
struct WGen {
    YBWord word;
    int level() const { return word.length() - 1; }
    friend bool operator==(const WGen&, const WGen&) = default;
    friend auto operator<=>(const WGen&, const WGen&) = default;
};

/// A term u ⊗ v of the dual coproduct.
using WTensor = std::pair<WGen, WGen>;

/// Quadratic word g^* h^* in level-0 generators.
using QuadraticWord = std::pair<Gen, Gen>;

/// The dual-bar model of H*(F_k) up to a maximum resolution level.
class BarModel {
  public:
    BarModel(int arity, int max_level);

    int arity() const { return arity_; }
    int max_level() const { return max_level_; }
    const std::vector<YBWord>& basis(int level) const;
    std::size_t dim(int level) const { return basis(level).size(); }
    int index_of(const YBWord& w) const;

    /// Component W_{a+b+1} → W_a ⊗ W_b of the dual coproduct, as pairs of
    /// basis indices per source generator.
    const std::vector<std::vector<std::pair<int, int>>>& coproduct_component(int a, int b) const;

    /// The (level-1, 0) and (0, level-1) parts of μ^*(w).
    F2Sum<WTensor> coproduct(const WGen& w) const;

  private:
    int arity_;
    int max_level_;
    std::vector<std::vector<YBWord>> basis_;
    std::map<YBWord, int> index_;
    std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, int>>>> components_;
};

/// The differential on W_1 by the explicit four-case formula.
F2Sum<QuadraticWord> d_w1(const WGen& w);

/// The same data read off the coproduct: all g ⊗ h with w in g·h.
F2Sum<QuadraticWord> d_w1_from_coproduct(const BarModel& model, const WGen& w);

/// Sparse map W_level → H^degree: row r is the image of the r-th basis generator.
struct HomWH {
    int level = 0;
    int degree = 0;
    gf2::BitMatrix images;

    friend bool operator==(const HomWH&, const HomWH&) = default;
};

HomWH zero_hom(const BarModel& model, const ArnoldAlgebra& h, int level, int degree);

/// The twisting cochain τ: s(B_ij)^* ↦ A_ij, zero on higher levels.
HomWH tau(const BarModel& model, const ArnoldAlgebra& h);

/// Shared k = 4 instances used by the obstruction computation.
const ArnoldAlgebra& arnold4();
const BarModel& bar4();

}  // namespace confobs
