#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace confobs {

inline constexpr int kMaxArity = 8;

/// Relative order of two labels inside a permutation: (12) or (21).
enum class PairOrder : std::uint8_t { Forward, Reversed };

/// How `act(g, p)` relabels: the letter x becomes g(x) (Relabel) or g^{-1}(x) (InverseRelabel).
/// Relabel reproduces the representative/class table of the H_2 cycle basis.
enum class ActionConvention { Relabel, InverseRelabel };
inline constexpr ActionConvention kActionConvention = ActionConvention::Relabel;

/// A permutation of {1..k} in one-line notation: word[x-1] = σ(x).
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::initializer_list<int> word);
    explicit Perm(const std::vector<int>& word);

    static Perm identity(int k);
    /// Parses the digit form "4312".
    static Perm parse(std::string_view text);

    int arity() const { return arity_; }
    int operator()(int x) const { return word_[static_cast<std::size_t>(x - 1)]; }
    /// Position (1-based) of letter v in the word, i.e. σ^{-1}(v).
    int position(int v) const;
    std::vector<int> word() const { return {word_.begin(), word_.begin() + arity_}; }

    /// Lexicographic rank among all permutations of the same arity.
    int rank() const;
    static Perm unrank(int k, int rank);

    std::string to_string() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        if (a.arity_ != b.arity_) return a.arity_ <=> b.arity_;
        return a.word_ <=> b.word_;
    }

  private:
    std::array<std::int8_t, kMaxArity> word_{};
    std::int8_t arity_ = 0;
};

/// (p∘q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

/// (12) iff label i precedes label j in the word of p.
PairOrder project_pair(const Perm& p, int i, int j);

/// Relative order pattern of labels (a,b,c) in p, as an arity-3 permutation.
Perm project_triple(const Perm& p, int a, int b, int c);

/// Operad composition in the permutation operad: the letter `slot` of p is
/// replaced by the block {slot..slot+m-1} ordered by q; larger letters shift up.
Perm block_substitute(const Perm& p, int slot, const Perm& q);

/// Diagonal Σ_k action on a single level, under kActionConvention.
Perm act(const Perm& g, const Perm& p);

/// All permutations of arity k in lexicographic order.
const std::vector<Perm>& all_perms(int k);

int factorial(int n);

}  // namespace confobs
