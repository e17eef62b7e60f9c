#pragma once

// The level <= 2 part of the filtered model for k = 4: the cochain maps φ on W_0
// and W_1, the error cocycles φ(dw) on W_2, the obstruction map α, the
// convolution complex Hom(W, H) with ∂f = f⋆τ + τ⋆f, and its dual W ⊗ H_*.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "confobs/algebra.hpp"
#include "confobs/cochain.hpp"

namespace confobs {

/// A map W_2 → H^2 (90 × 11 for k = 4).
using AlphaMap = HomWH;

Cochain phi0(const WGen& w);

/// φ on W_1; `gauge`, when given (a map W_1 → H^1), adds the ω-representative
/// of gauge(w) to the value.
Cochain phi1(const WGen& w, const HomWH* gauge = nullptr);

/// φ(dw) for w in W_2: cup products over the (1,0) and (0,1) coproduct terms.
Cochain phi_d(const WGen& w, const HomWH* gauge = nullptr);

ArnoldElement alpha(const WGen& w);

/// α on every level-2 generator, classes read through the pairing matrix.
AlphaMap alpha_map();
/// Same map with classes read off the linear-algebra H^2 oracle instead.
AlphaMap alpha_map_oracle();

/// f ⋆ g through the coproduct component (f.level, g.level) and the Arnold product.
HomWH convolution(const HomWH& f, const HomWH& g);
HomWH hochschild_d(const HomWH& f);

/// Flattened coordinates of a map: index = generator * dim(H^degree) + class.
gf2::BitVector flatten(const HomWH& f);
HomWH unflatten(int level, int degree, const gf2::BitVector& v);

/// Matrix of ∂ : Hom(W_1, H^1) → Hom(W_2, H^2) in flattened coordinates (990 × 150).
gf2::BitMatrix hochschild_matrix();

HomWH random_hom(int level, int degree, std::mt19937_64& rng);

/// An element of W ⊗ H_*: pairs (word, dual basis monomial).
using DualTerm = std::pair<YBWord, ArnoldMonomial>;
using DualChainElt = F2Sum<DualTerm>;

std::string to_string(const DualChainElt& z);

DualChainElt dual_d(const DualChainElt& z);

/// The six summands β_1..β_6 (grouped by W_2 generator) and their sum.
std::vector<DualChainElt> beta_summands();
DualChainElt beta();

/// Σ over summands w ⊗ h* of the coefficient of h in a(w).
bool pair_alpha_beta(const AlphaMap& a, const DualChainElt& b);

struct CoboundaryVerdict {
    bool coboundary = false;
    std::optional<HomWH> witness;  // f with ∂f = a
};
CoboundaryVerdict is_coboundary(const AlphaMap& a);

/// α recomputed after perturbing φ_1 by f : W_1 → H^1.
AlphaMap gauge_shift(const HomWH& f);

struct ObstructionSummary {
    AlphaMap alpha;
    bool oracle_agrees = false;
    bool alpha_is_cocycle = false;
    bool beta_is_cycle = false;
    bool pairing = false;
    CoboundaryVerdict verdict;
};

/// Runs the whole computation; throws std::logic_error with a dump when the
/// solvability verdict, the β-pairing and the oracle disagree.
ObstructionSummary analyze_obstruction();

}  // namespace confobs
