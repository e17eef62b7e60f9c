#include "confobs/obstruction.hpp"

#include <sstream>
#include <stdexcept>

#include "confobs/operad.hpp"

namespace confobs {

namespace {

void require_level(const WGen& w, int level, const char* what) {
    if (w.level() != level) throw std::invalid_argument(std::string(what) + ": wrong level for " + w.word.to_string());
}

Cochain omega_of(const Gen& g) { return omega(4, g.i, g.j); }

// ω-representative of a degree-1 class given in basis coordinates.
Cochain omega_rep(const gf2::BitVector& coords) {
    const auto& basis = arnold4().basis(1);
    Cochain c = zero_cochain(4, 2, 1);
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (coords.get(r)) c += omega_of(basis[r].factors.front());
    return c;
}

void check_shape(const HomWH& f, int level, int degree, const char* what) {
    if (f.level != level || f.degree != degree) throw std::invalid_argument(std::string(what) + ": wrong bidegree");
}

}  // namespace

Cochain phi0(const WGen& w) {
    require_level(w, 0, "phi0");
    return omega_of(w.word.factors.front());
}

Cochain phi1(const WGen& w, const HomWH* gauge) {
    require_level(w, 1, "phi1");
    const Gen a = w.word.factors[0], b = w.word.factors[1];
    const int i = a.i, j = a.j, k = b.i, l = b.j;
    Cochain c = zero_cochain(4, 2, 1);
    if (a == b) {
        // zero
    } else if (j < l) {
        c = cup1(omega(4, i, j), omega(4, k, l));
    } else if (i > k) {
        c = pullback_triple(4, k, i, l, ar());
    } else {
        c = pullback_triple(4, i, k, l, ar()) + cup1(omega(4, i, l), omega(4, k, l));
    }
    if (gauge) {
        check_shape(*gauge, 1, 1, "phi1 gauge");
        c += omega_rep(gauge->images.row_vector(static_cast<std::size_t>(bar4().index_of(w.word))));
    }
    return c;
}

Cochain phi_d(const WGen& w, const HomWH* gauge) {
    require_level(w, 2, "phi_d");
    const auto& model = bar4();
    const int s = model.index_of(w.word);
    Cochain out = zero_cochain(4, 2, 2);
    for (auto [u, v] : model.coproduct_component(1, 0)[static_cast<std::size_t>(s)])
        out += cup(phi1(WGen{model.basis(1)[u]}, gauge), phi0(WGen{model.basis(0)[v]}));
    for (auto [u, v] : model.coproduct_component(0, 1)[static_cast<std::size_t>(s)])
        out += cup(phi0(WGen{model.basis(0)[u]}), phi1(WGen{model.basis(1)[v]}, gauge));
    return out;
}

ArnoldElement alpha(const WGen& w) { return h2_classifier().class_of_cocycle(phi_d(w)); }

namespace {

AlphaMap alpha_map_with(const HomWH* gauge) {
    const auto& model = bar4();
    const auto& h = arnold4();
    const auto& classifier = h2_classifier();
    const auto& gens = model.basis(2);
    std::vector<gf2::BitVector> rows(gens.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t n = 0; n < gens.size(); ++n)
        rows[n] = h.to_bits(classifier.class_of_cocycle(phi_d(WGen{gens[n]}, gauge)), 2);
    AlphaMap a = zero_hom(model, h, 2, 2);
    for (std::size_t n = 0; n < rows.size(); ++n) a.images.set_row(n, rows[n]);
    return a;
}

}  // namespace

AlphaMap alpha_map() { return alpha_map_with(nullptr); }

AlphaMap alpha_map_oracle() {
    const auto& model = bar4();
    const auto& h = arnold4();
    const auto& gens = model.basis(2);
    std::vector<Cochain> cocycles(gens.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t n = 0; n < gens.size(); ++n) cocycles[n] = phi_d(WGen{gens[n]});
    const auto classes = h2_oracle().coordinates(cocycles);
    AlphaMap a = zero_hom(model, h, 2, 2);
    for (std::size_t n = 0; n < classes.size(); ++n) a.images.set_row(n, h.to_bits(classes[n], 2));
    return a;
}

HomWH convolution(const HomWH& f, const HomWH& g) {
    const auto& model = bar4();
    const auto& h = arnold4();
    const int level = f.level + g.level + 1;
    const int degree = f.degree + g.degree;
    if (level > model.max_level()) throw std::invalid_argument("convolution: level beyond the bar model");
    HomWH out = zero_hom(model, h, level, degree);
    if (degree > h.top_degree()) return out;
    const auto& comp = model.coproduct_component(f.level, g.level);
    for (std::size_t s = 0; s < comp.size(); ++s) {
        for (auto [u, v] : comp[s]) {
            for (std::size_t a = 0; a < f.images.cols(); ++a) {
                if (!f.images.get(static_cast<std::size_t>(u), a)) continue;
                for (std::size_t b = 0; b < g.images.cols(); ++b) {
                    if (!g.images.get(static_cast<std::size_t>(v), b)) continue;
                    for (const auto& m : h.product(f.degree, static_cast<int>(a), g.degree, static_cast<int>(b)))
                        out.images.flip(s, static_cast<std::size_t>(h.index_of(m)));
                }
            }
        }
    }
    return out;
}

HomWH hochschild_d(const HomWH& f) {
    const HomWH t = tau(bar4(), arnold4());
    HomWH out = convolution(f, t);
    const HomWH right = convolution(t, f);
    for (std::size_t r = 0; r < out.images.rows(); ++r)
        for (std::size_t c = 0; c < out.images.cols(); ++c)
            if (right.images.get(r, c)) out.images.flip(r, c);
    return out;
}

gf2::BitVector flatten(const HomWH& f) {
    const std::size_t w = f.images.cols();
    gf2::BitVector v(f.images.rows() * w);
    for (std::size_t r = 0; r < f.images.rows(); ++r)
        for (std::size_t c = 0; c < w; ++c)
            if (f.images.get(r, c)) v.set(r * w + c);
    return v;
}

HomWH unflatten(int level, int degree, const gf2::BitVector& v) {
    HomWH f = zero_hom(bar4(), arnold4(), level, degree);
    const std::size_t w = f.images.cols();
    if (v.size() != f.images.rows() * w) throw std::invalid_argument("unflatten: size mismatch");
    for (std::size_t r = 0; r < f.images.rows(); ++r)
        for (std::size_t c = 0; c < w; ++c)
            if (v.get(r * w + c)) f.images.set(r, c);
    return f;
}

gf2::BitMatrix hochschild_matrix() {
    const auto& model = bar4();
    const auto& h = arnold4();
    const std::size_t rows = model.dim(2) * h.dim(2);
    const std::size_t cols = model.dim(1) * h.dim(1);
    gf2::BitMatrix m(rows, cols);
    for (std::size_t col = 0; col < cols; ++col) {
        HomWH f = zero_hom(model, h, 1, 1);
        f.images.set(col / h.dim(1), col % h.dim(1));
        const auto image = flatten(hochschild_d(f));
        for (std::size_t r = 0; r < rows; ++r)
            if (image.get(r)) m.set(r, col);
    }
    return m;
}

HomWH random_hom(int level, int degree, std::mt19937_64& rng) {
    HomWH f = zero_hom(bar4(), arnold4(), level, degree);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < f.images.rows(); ++r)
        for (std::size_t c = 0; c < f.images.cols(); ++c)
            if (coin(rng)) f.images.set(r, c);
    return f;
}

std::string to_string(const DualChainElt& z) {
    if (z.is_zero()) return "0";
    std::string s;
    for (const auto& [w, m] : z) {
        if (!s.empty()) s += " + ";
        s += w.to_string() + "* (x) " + m.to_string() + "*";
    }
    return s;
}

DualChainElt dual_d(const DualChainElt& z) {
    const auto& model = bar4();
    const auto& h = arnold4();
    DualChainElt out;
    for (const auto& [w, m] : z) {
        const int p = w.length() - 1;
        const int q = m.degree();
        if (p < 1) throw std::invalid_argument("dual_d: level-0 generators have no differential");
        const int s = model.index_of(w);
        // Cap with A is the transpose of multiplication by A.
        auto cap = [&](int a_index, const YBWord& keep) {
            for (std::size_t g = 0; g < h.dim(q - 1); ++g)
                if (h.product(q - 1, static_cast<int>(g), 1, a_index).contains(m))
                    out.toggle({keep, h.basis(q - 1)[g]});
        };
        for (auto [u, v] : model.coproduct_component(p - 1, 0)[static_cast<std::size_t>(s)])
            cap(h.index_of(ArnoldMonomial{{model.basis(0)[v].factors.front()}}), model.basis(p - 1)[u]);
        for (auto [u, v] : model.coproduct_component(0, p - 1)[static_cast<std::size_t>(s)])
            cap(h.index_of(ArnoldMonomial{{model.basis(0)[u].factors.front()}}), model.basis(p - 1)[v]);
    }
    return out;
}

std::vector<DualChainElt> beta_summands() {
    struct Row {
        const char* word;
        std::vector<const char*> classes;
    };
    const std::vector<Row> rows = {
        {"B12.B23.B13", {"A13.A14", "A13.A24"}},
        {"B12.B24.B14", {"A12.A14"}},
        {"B12.B34.B24", {"A12.A13", "A12.A23", "A12.A14", "A12.A24"}},
        {"B23.B13.B24", {"A13.A14", "A13.A24"}},
        {"B23.B24.B14", {"A12.A14"}},
        {"B23.B34.B24", {"A12.A34"}},
    };
    std::vector<DualChainElt> out;
    for (const auto& r : rows) {
        DualChainElt z;
        for (const char* c : r.classes) z.toggle({YBWord::parse(r.word), ArnoldMonomial::parse(c)});
        out.push_back(std::move(z));
    }
    return out;
}

DualChainElt beta() {
    DualChainElt b;
    for (const auto& s : beta_summands()) b += s;
    return b;
}

bool pair_alpha_beta(const AlphaMap& a, const DualChainElt& b) {
    check_shape(a, 2, 2, "pair_alpha_beta");
    bool acc = false;
    for (const auto& [w, m] : b) {
        if (w.length() != 3 || m.degree() != 2) throw std::invalid_argument("pair_alpha_beta: bidegree mismatch");
        acc ^= a.images.get(static_cast<std::size_t>(bar4().index_of(w)), static_cast<std::size_t>(arnold4().index_of(m)));
    }
    return acc;
}

CoboundaryVerdict is_coboundary(const AlphaMap& a) {
    check_shape(a, 2, 2, "is_coboundary");
    if (!hochschild_d(a).images.is_zero())
        throw std::invalid_argument("is_coboundary: input is not a cocycle");
    static const gf2::BitMatrix m = hochschild_matrix();
    const auto x = gf2::solve(m, flatten(a));
    if (!x) return {false, std::nullopt};
    return {true, unflatten(1, 1, *x)};
}

AlphaMap gauge_shift(const HomWH& f) {
    check_shape(f, 1, 1, "gauge_shift");
    return alpha_map_with(&f);
}

ObstructionSummary analyze_obstruction() {
    ObstructionSummary s;
    s.alpha = alpha_map();
    s.oracle_agrees = alpha_map_oracle() == s.alpha;
    s.alpha_is_cocycle = hochschild_d(s.alpha).images.is_zero();
    s.beta_is_cycle = dual_d(beta()).is_zero();
    s.pairing = pair_alpha_beta(s.alpha, beta());
    if (s.alpha_is_cocycle) s.verdict = is_coboundary(s.alpha);
    const bool consistent = s.oracle_agrees && s.alpha_is_cocycle && s.beta_is_cycle &&
                            s.pairing == !s.verdict.coboundary;
    if (!consistent) {
        std::ostringstream os;
        os << "obstruction checks disagree: oracle_agrees=" << s.oracle_agrees << " alpha_cocycle=" << s.alpha_is_cocycle
           << " beta_cycle=" << s.beta_is_cycle << " pairing=" << s.pairing << " coboundary=" << s.verdict.coboundary
           << "\n";
        const auto& gens = bar4().basis(2);
        for (std::size_t n = 0; n < gens.size(); ++n) {
            const auto e = arnold4().from_bits(s.alpha.images.row_vector(n), 2);
            if (!e.is_zero()) os << "  alpha(" << gens[n].to_string() << "*) = " << confobs::to_string(e) << "\n";
        }
        throw std::logic_error(os.str());
    }
    return s;
}

}  // namespace confobs
