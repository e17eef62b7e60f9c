#pragma once

// Chain-level Barratt-Eccles operad structure and the explicit cycle basis of
// H_2 of the complexity-2 arity-4 complex, together with two independent ways
// of reading off the class of a 2-cocycle.

#include <optional>
#include <string>
#include <vector>

#include "confobs/algebra.hpp"
#include "confobs/be_complex.hpp"
#include "confobs/cochain.hpp"
#include "confobs/gf2.hpp"

namespace confobs {

/// F_2 sum of non-degenerate simplices, not tied to any filtration table.
struct ChainElt {
    int arity = 0;
    int degree = 0;
    std::vector<Simplex> terms;  // sorted, no repeats

    static ChainElt of(std::vector<Simplex> simplices);
    static ChainElt parse(std::string_view text);
    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;
    friend bool operator==(const ChainElt&, const ChainElt&) = default;
};

/// x ∘_slot y: Eilenberg-Zilber shuffles of the two strings composed levelwise
/// by block substitution; degenerate strings are dropped.
ChainElt circ(const ChainElt& x, int slot, const ChainElt& y);

/// x · y = (m ∘_2 y) ∘_1 x with m = (12).
ChainElt mult(const ChainElt& x, const ChainElt& y);

ChainElt act_chain(const Perm& g, const ChainElt& z);

/// The arity-1 unit 0-simplex.
ChainElt unit_chain();

/// γ = (12|21) + (21|12).
ChainElt gamma_cycle();

/// Indexed form inside the given filtration; throws if a term lies outside.
Chain to_chain(const ChainElt& z, int complexity);

struct CycleRep {
    std::string label;  // e.g. "(34)(12)T"
    ChainElt chain;
    ArnoldMonomial dual_class;
};

/// The eleven H_2 representatives, in the order of their dual classes' table.
std::vector<CycleRep> h2_cycle_basis();

/// Cocycle representative ω_{i1 j1} ⌣ ω_{i2 j2} of an Arnold monomial of degree 2.
Cochain omega_product(const ArnoldMonomial& m);

/// Pairing-matrix route to cohomology classes of 2-cocycles in arity 4.
class H2Classifier {
  public:
    H2Classifier();

    /// M[r][s] = ⟨ω-product of basis monomial r, cycle of class s⟩.
    const gf2::BitMatrix& pairing_matrix() const { return pairing_; }
    bool pairing_is_identity() const { return pairing_ == gf2::BitMatrix::identity(pairing_.rows()); }
    const std::vector<Chain>& cycles() const { return cycles_; }
    /// Cycles listed in Arnold-basis order of their dual classes.
    const std::vector<CycleRep>& reps() const { return reps_; }

    ArnoldElement class_of_cocycle(const Cochain& c) const;

  private:
    std::vector<CycleRep> reps_;
    std::vector<Chain> cycles_;
    gf2::BitMatrix pairing_;
    gf2::BitMatrix pairing_inverse_;
};
const H2Classifier& h2_classifier();

/// Linear-algebra route: H^2 = ker d2 / im d1 of the complexity-2 arity-4
/// cochain complex, with coordinates solved against [d1 | ω-products].
class H2Oracle {
  public:
    H2Oracle();

    std::size_t dim_c1() const { return d1_.cols(); }
    std::size_t dim_c2() const { return d1_.rows(); }
    std::size_t dim_c3() const { return d2_.rows(); }
    std::size_t rank_d1() const { return rank_d1_; }
    std::size_t rank_d2() const { return rank_d2_; }
    std::size_t dim_h2() const { return dim_c2() - rank_d2_ - rank_d1_; }
    /// The eleven ω-products are independent modulo coboundaries.
    bool representatives_independent() const { return reps_independent_; }

    ArnoldElement coordinates(const Cochain& c) const;
    std::vector<ArnoldElement> coordinates(const std::vector<Cochain>& cs) const;
    bool is_coboundary(const Cochain& c) const;

  private:
    gf2::BitMatrix d1_;
    gf2::BitMatrix d2_;
    gf2::BitMatrix augmented_;  // [d1 | reps]
    std::size_t rank_d1_ = 0;
    std::size_t rank_d2_ = 0;
    bool reps_independent_ = false;
};
const H2Oracle& h2_oracle();

/// Two-block / three-block shape of the cycle simplices (see h2_cycle_basis).
bool has_planetary_block_shape(const Simplex& s);

}  // namespace confobs
