#pragma once

// Normalized (co)chains over F_2 on the filtered Barratt-Eccles complexes.
// A (co)chain is its support: a sorted set of ids into the canonical table of
// its (arity, complexity, degree).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "confobs/be_complex.hpp"
#include "confobs/gf2.hpp"

namespace confobs {

struct Cochain {
    int arity = 0;
    int complexity = 2;
    int degree = 0;
    std::vector<SimplexId> support;

    bool is_zero() const { return support.empty(); }
    const ComplexIndex& table() const { return complex_table(arity, complexity, degree); }
    std::vector<Simplex> simplices() const;

    Cochain& operator+=(const Cochain& other);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Chains share the cochain representation; only the role differs.
using Chain = Cochain;

Cochain zero_cochain(int arity, int complexity, int degree);

/// Sum of the given simplices over F_2; each must lie in the filtration.
Cochain make_cochain(int arity, int complexity, int degree, const std::vector<Simplex>& simplices);

/// Sorts ids and cancels repeated pairs.
void normalize_support(std::vector<SimplexId>& ids);

/// Text form "132|312 + 123|321"; the zero cochain prints as "0".
std::string format(const Cochain& c);
Cochain parse_cochain(std::string_view text, int arity, int complexity, int degree);

Cochain coboundary(const Cochain& c);
Chain boundary(const Chain& z);

/// Alexander-Whitney cup product.
Cochain cup(const Cochain& a, const Cochain& b);

/// Steenrod ∪₁ of two 1-cochains: the intersection of supports.
Cochain cup1(const Cochain& a, const Cochain& b);

/// Pullback along the forgetful map selecting labels (i, j) into arity 2.
Cochain pullback_pair(int target_arity, int i, int j, const Cochain& c);
/// Pullback along the forgetful map selecting labels (a, b, c) into arity 3.
Cochain pullback_triple(int target_arity, int a, int b, int c, const Cochain& x);

/// ω_ij = π_ij^*((12|21)^*) in complexity 2.
Cochain omega(int arity, int i, int j);
/// Ar = (132|312)^* in arity 3, complexity 2.
Cochain ar();

/// Evaluation ⟨c, z⟩ = |Supp(c) ∩ Supp(z)| mod 2.
bool pair(const Cochain& c, const Chain& z);

/// Matrix of the coboundary C^l → C^{l+1}: rows index degree l+1, columns degree l.
gf2::BitMatrix coboundary_matrix(int arity, int complexity, int degree);
/// Single-threaded reference for coboundary_matrix.
gf2::BitMatrix coboundary_matrix_serial(int arity, int complexity, int degree);

gf2::BitVector to_bits(const Cochain& c);
Cochain from_bits(int arity, int complexity, int degree, const gf2::BitVector& bits);

}  // namespace confobs
