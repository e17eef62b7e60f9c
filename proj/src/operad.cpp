#include "confobs/operad.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace confobs {

ChainElt ChainElt::of(std::vector<Simplex> simplices) {
    ChainElt z;
    if (!simplices.empty()) {
        z.arity = simplices.front().arity();
        z.degree = simplices.front().degree();
    }
    std::erase_if(simplices, [](const Simplex& s) { return s.is_degenerate(); });
    for (const auto& s : simplices)
        if (s.arity() != z.arity || s.degree() != z.degree)
            throw std::invalid_argument("ChainElt: terms must share arity and degree");
    std::sort(simplices.begin(), simplices.end());
    for (std::size_t i = 0; i < simplices.size();) {
        std::size_t j = i;
        while (j < simplices.size() && simplices[j] == simplices[i]) ++j;
        if ((j - i) % 2 == 1) z.terms.push_back(simplices[i]);
        i = j;
    }
    return z;
}

ChainElt ChainElt::parse(std::string_view text) {
    std::vector<Simplex> terms;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto plus = text.find('+', start);
        auto term = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        while (!term.empty() && (term.front() == ' ' || term.front() == '(')) term.remove_prefix(1);
        while (!term.empty() && (term.back() == ' ' || term.back() == ')')) term.remove_suffix(1);
        if (!term.empty() && term != "0") terms.push_back(Simplex::parse(term));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return of(std::move(terms));
}

std::string ChainElt::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty()) s += " + ";
        s += t.to_string();
    }
    return s;
}

ChainElt circ(const ChainElt& x, int slot, const ChainElt& y) {
    if (slot < 1 || slot > x.arity) throw std::invalid_argument("circ: slot out of range");
    std::vector<Simplex> out;
    for (const auto& s : x.terms) {
        for (const auto& t : y.terms) {
            const int p = s.degree(), q = t.degree(), n = p + q;
            // A shuffle is the set of steps (out of n) that advance the x index.
            std::vector<bool> advance_x(static_cast<std::size_t>(n), false);
            std::fill(advance_x.begin(), advance_x.begin() + p, true);
            do {
                std::vector<Perm> levels;
                levels.reserve(static_cast<std::size_t>(n) + 1);
                std::size_t a = 0, b = 0;
                levels.push_back(block_substitute(s.levels[a], slot, t.levels[b]));
                for (bool step_x : advance_x) {
                    if (step_x)
                        ++a;
                    else
                        ++b;
                    levels.push_back(block_substitute(s.levels[a], slot, t.levels[b]));
                }
                out.emplace_back(std::move(levels));
            } while (std::prev_permutation(advance_x.begin(), advance_x.end()));
        }
    }
    ChainElt z = ChainElt::of(std::move(out));
    z.arity = x.arity + y.arity - 1;
    z.degree = x.degree + y.degree;
    return z;
}

ChainElt mult(const ChainElt& x, const ChainElt& y) {
    const ChainElt m = ChainElt::of({Simplex({Perm{1, 2}})});
    return circ(circ(m, 2, y), 1, x);
}

ChainElt act_chain(const Perm& g, const ChainElt& z) {
    if (g.arity() != z.arity) throw std::invalid_argument("act_chain: arity mismatch");
    std::vector<Simplex> out;
    for (const auto& s : z.terms) {
        std::vector<Perm> levels;
        for (const auto& p : s.levels) levels.push_back(act(g, p));
        out.emplace_back(std::move(levels));
    }
    ChainElt r = ChainElt::of(std::move(out));
    r.arity = z.arity;
    r.degree = z.degree;
    return r;
}

ChainElt unit_chain() { return ChainElt::of({Simplex({Perm{1}})}); }

ChainElt gamma_cycle() { return ChainElt::parse("12|21 + 21|12"); }

Chain to_chain(const ChainElt& z, int complexity) {
    return make_cochain(z.arity, complexity, z.degree, z.terms);
}

std::vector<CycleRep> h2_cycle_basis() {
    const ChainElt gamma = gamma_cycle();
    const ChainElt t = mult(circ(gamma, 2, gamma), unit_chain());
    const ChainElt gg = mult(gamma, gamma);
    // Relabelling permutations in one-line form: (12) = 2134, (1234) = 2341, (134) = 3241, ...
    struct Row {
        const char* label;
        const char* g;
        const ChainElt* base;
        const char* cls;
    };
    const Row rows[] = {
        {"T", "1234", &t, "A12.A23"},
        {"(12)T", "2134", &t, "A12.A13"},
        {"(1234)T", "2341", &t, "A23.A34"},
        {"(134)T", "3241", &t, "A23.A24"},
        {"(234)T", "1342", &t, "A13.A34"},
        {"(13)(24)T", "3412", &t, "A13.A14"},
        {"(34)T", "1243", &t, "A12.A24"},
        {"(34)(12)T", "2143", &t, "A12.A14"},
        {"γ·γ", "1234", &gg, "A12.A34"},
        {"(23)(γ·γ)", "1324", &gg, "A13.A24"},
        {"(24)(γ·γ)", "1432", &gg, "A23.A14"},
    };
    std::vector<CycleRep> out;
    for (const auto& r : rows)
        out.push_back({r.label, act_chain(Perm::parse(r.g), *r.base), ArnoldMonomial::parse(r.cls)});
    return out;
}

Cochain omega_product(const ArnoldMonomial& m) {
    if (m.degree() != 2) throw std::invalid_argument("omega_product: degree-2 monomial expected");
    const auto& f = m.factors;
    return cup(omega(4, f[0].i, f[0].j), omega(4, f[1].i, f[1].j));
}

H2Classifier::H2Classifier() {
    const auto& h = arnold4();
    reps_ = h2_cycle_basis();
    std::sort(reps_.begin(), reps_.end(),
              [&](const CycleRep& a, const CycleRep& b) { return h.index_of(a.dual_class) < h.index_of(b.dual_class); });
    for (const auto& r : reps_) cycles_.push_back(to_chain(r.chain, 2));

    const auto& basis = h.basis(2);
    pairing_ = gf2::BitMatrix(basis.size(), cycles_.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Cochain rep = omega_product(basis[r]);
        for (std::size_t s = 0; s < cycles_.size(); ++s)
            if (pair(rep, cycles_[s])) pairing_.set(r, s);
    }
    if (gf2::rank(pairing_) != basis.size()) throw std::logic_error("H_2 pairing matrix is singular");
    pairing_inverse_ = pairing_.transpose();
}

ArnoldElement H2Classifier::class_of_cocycle(const Cochain& c) const {
    if (c.arity != 4 || c.complexity != 2 || c.degree != 2)
        throw std::invalid_argument("class_of_cocycle: expects a 2-cochain of the complexity-2 arity-4 complex");
    if (!coboundary(c).is_zero()) throw std::invalid_argument("class_of_cocycle: input is not a cocycle");
    // ⟨c, z_s⟩ = Σ_r x_r M[r][s], so x solves Mᵀ x = v.
    gf2::BitVector v(cycles_.size());
    for (std::size_t s = 0; s < cycles_.size(); ++s)
        if (pair(c, cycles_[s])) v.set(s);
    const auto x = gf2::solve(pairing_inverse_, v);
    return arnold4().from_bits(*x, 2);
}

const H2Classifier& h2_classifier() {
    static const H2Classifier c;
    return c;
}

H2Oracle::H2Oracle() : d1_(coboundary_matrix(4, 2, 1)), d2_(coboundary_matrix(4, 2, 2)) {
    rank_d1_ = gf2::rank(d1_);
    rank_d2_ = gf2::rank(d2_);
    const auto& basis = arnold4().basis(2);
    augmented_ = gf2::BitMatrix(d1_.rows(), d1_.cols() + basis.size());
    for (std::size_t r = 0; r < d1_.rows(); ++r)
        for (std::size_t c = 0; c < d1_.cols(); ++c)
            if (d1_.get(r, c)) augmented_.set(r, c);
    for (std::size_t n = 0; n < basis.size(); ++n)
        for (auto id : omega_product(basis[n]).support) augmented_.set(id, d1_.cols() + n);
    reps_independent_ = gf2::rank(augmented_) == rank_d1_ + basis.size();
}

std::vector<ArnoldElement> H2Oracle::coordinates(const std::vector<Cochain>& cs) const {
    std::vector<gf2::BitVector> rhs;
    for (const auto& c : cs) {
        if (c.arity != 4 || c.complexity != 2 || c.degree != 2)
            throw std::invalid_argument("H2Oracle: expects a 2-cochain of the complexity-2 arity-4 complex");
        rhs.push_back(to_bits(c));
    }
    const auto sols = gf2::solve_many(augmented_, rhs);
    const std::size_t n = arnold4().dim(2);
    std::vector<ArnoldElement> out;
    for (const auto& y : sols) {
        if (!y) throw std::invalid_argument("H2Oracle: cochain is not a cocycle");
        gf2::BitVector x(n);
        for (std::size_t r = 0; r < n; ++r)
            if (y->get(d1_.cols() + r)) x.set(r);
        out.push_back(arnold4().from_bits(x, 2));
    }
    return out;
}

ArnoldElement H2Oracle::coordinates(const Cochain& c) const { return coordinates(std::vector<Cochain>{c}).front(); }

bool H2Oracle::is_coboundary(const Cochain& c) const { return gf2::solve(d1_, to_bits(c)).has_value(); }

const H2Oracle& h2_oracle() {
    static const H2Oracle o;
    return o;
}

namespace {

bool two_block_shape(const Simplex& s) {
    // Blocks {a,b} and {c,d}: each contiguous, in fixed block order, one block swapping per step.
    const Perm& p0 = s.levels.front();
    const int a = p0(1), b = p0(2), c = p0(3), d = p0(4);
    const std::set<int> left{a, b}, right{c, d};
    for (const auto& p : s.levels)
        if (!left.contains(p(1)) || !left.contains(p(2)) || !right.contains(p(3)) || !right.contains(p(4)))
            return false;
    for (std::size_t m = 0; m + 1 < s.levels.size(); ++m) {
        const auto& x = s.levels[m];
        const auto& y = s.levels[m + 1];
        const bool left_moves = x(1) != y(1);
        const bool right_moves = x(3) != y(3);
        if (left_moves == right_moves) return false;
    }
    return true;
}

bool three_block_shape(const Simplex& s) {
    // A fixed last label; the other three alternate between a rotation and a transposition.
    const int fixed = s.levels.front()(4);
    for (const auto& p : s.levels)
        if (p(4) != fixed) return false;
    auto is_rotation = [](const Perm& x, const Perm& y) {
        int moved = 0;
        for (int i = 1; i <= 3; ++i)
            if (x(i) != y(i)) ++moved;
        return moved == 3;
    };
    for (std::size_t m = 0; m + 2 < s.levels.size(); ++m)
        if (is_rotation(s.levels[m], s.levels[m + 1]) == is_rotation(s.levels[m + 1], s.levels[m + 2])) return false;
    return true;
}

}  // namespace

bool has_planetary_block_shape(const Simplex& s) {
    if (s.arity() != 4 || s.levels.empty()) return false;
    return two_block_shape(s) || three_block_shape(s);
}

}  // namespace confobs
