#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "confobs/algebra.hpp"

using namespace confobs;

namespace {

std::vector<Gen> generators(int k) {
    std::vector<Gen> g;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) g.push_back({i, j});
    return g;
}

// Coefficients of prod_{m<k}(1 + m x) or 1 / prod_{m<k}(1 - m x), up to x^n.
std::vector<long> series(int k, int n, bool inverse) {
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m < k; ++m) {
        if (inverse) {
            for (int d = 1; d <= n; ++d) c[static_cast<std::size_t>(d)] += m * c[static_cast<std::size_t>(d - 1)];
        } else {
            for (int d = n; d >= 1; --d) c[static_cast<std::size_t>(d)] += m * c[static_cast<std::size_t>(d - 1)];
        }
    }
    return c;
}

// Rewriting at the rightmost descent instead of the leftmost.
YBElement rightmost_normal_form(const GenWord& w) {
    std::size_t t = w.size();
    for (std::size_t s = 0; s + 1 < w.size(); ++s)
        if (w[s].j > w[s + 1].j) t = s;
    if (t == w.size()) return {YBWord{w}};
    const Gen x = w[t], y = w[t + 1];
    auto with = [&](Gen a, Gen b) {
        GenWord v = w;
        v[t] = a;
        v[t + 1] = b;
        return v;
    };
    YBElement out = rightmost_normal_form(with(y, x));
    if (!(x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j)) {
        out += rightmost_normal_form(with(Gen::of(y.i, x.j), Gen::of(y.j, x.j)));
        out += rightmost_normal_form(with(Gen::of(y.j, x.j), Gen::of(y.i, x.j)));
    }
    return out;
}

YBElement multiply_yb(const YBElement& a, const YBElement& b) {
    YBElement out;
    for (const auto& x : a)
        for (const auto& y : b) {
            GenWord w = x.factors;
            w.insert(w.end(), y.factors.begin(), y.factors.end());
            out += yb_normalize(w);
        }
    return out;
}

}  // namespace

TEST_CASE("generator and word parsing") {
    CHECK(Gen::of(3, 1) == Gen{1, 3});
    CHECK_THROWS_AS(Gen::of(2, 2), std::invalid_argument);
    CHECK(YBWord::parse("B12.B23.B13").to_string() == "B12.B23.B13");
    CHECK(YBWord::parse("B12.B23.B13").admissible());
    CHECK_FALSE(YBWord{{{2, 3}, {1, 2}}}.admissible());
    CHECK_THROWS_AS(YBWord::parse("B23.B12"), std::invalid_argument);
    CHECK(ArnoldMonomial::parse("A12.A23").admissible());
    CHECK_FALSE(ArnoldMonomial{{{1, 3}, {2, 3}}}.admissible());
    CHECK_THROWS_AS(ArnoldMonomial::parse("A13.A23"), std::invalid_argument);
    CHECK(ArnoldMonomial::parse("1").degree() == 0);
}

TEST_CASE("dimensions for k = 4") {
    const std::vector<std::size_t> arnold{1, 6, 11, 6}, yb{6, 25, 90, 301};
    for (int q = 0; q < 4; ++q) CHECK(dims(AlgebraKind::Arnold, 4, q) == arnold[static_cast<std::size_t>(q)]);
    for (int n = 1; n <= 4; ++n) CHECK(dims(AlgebraKind::YangBaxter, 4, n) == yb[static_cast<std::size_t>(n - 1)]);
    CHECK(dims(AlgebraKind::Arnold, 4, 4) == 0);
}

TEST_CASE("dimensions against generating functions") {
    for (int k : {3, 4, 5}) {
        const auto a = series(k, 4, false), b = series(k, 4, true);
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(static_cast<long>(dims(AlgebraKind::Arnold, k, n)) == a[static_cast<std::size_t>(n)]);
            CHECK(static_cast<long>(dims(AlgebraKind::YangBaxter, k, n)) == b[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("Arnold relations") {
    const GenWord a13a23{{1, 3}, {2, 3}};
    CHECK(to_string(arnold_normalize(a13a23)) == "A12.A13 + A12.A23");
    CHECK(arnold_normalize({{1, 2}, {1, 2}}).is_zero());
    CHECK(to_string(arnold_normalize({{1, 4}, {1, 2}})) == "A12.A14");
    const auto gens = generators(4);
    for (const auto& x : gens)
        for (const auto& y : gens) CHECK(arnold_normalize({x, y}) == arnold_normalize({y, x}));
    // A_ij A_jk + A_jk A_ki + A_ki A_ij = 0
    for (auto [i, j, k] : {std::tuple{1, 2, 3}, std::tuple{1, 2, 4}, std::tuple{2, 3, 4}, std::tuple{4, 1, 3}}) {
        const Gen ij = Gen::of(i, j), jk = Gen::of(j, k), ki = Gen::of(k, i);
        CHECK((arnold_normalize({ij, jk}) + arnold_normalize({jk, ki}) + arnold_normalize({ki, ij})).is_zero());
    }
}

TEST_CASE("Arnold algebra is associative") {
    const ArnoldAlgebra& h = arnold4();
    std::mt19937_64 rng(41);
    auto random_element = [&](int q) {
        ArnoldElement e;
        for (const auto& m : h.basis(q))
            if (rng() & 1U) e.toggle(m);
        return e;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_element(1), y = random_element(1), z = random_element(1);
        CHECK(h.multiply(h.multiply(x, y), z) == h.multiply(x, h.multiply(y, z)));
        CHECK(h.multiply(x, y) == h.multiply(y, x));
    }
    CHECK(h.dim(2) == 11);
    CHECK(h.from_bits(h.to_bits(random_element(2), 2), 2).size() <= 11);
}

TEST_CASE("Yang-Baxter rewriting is confluent on all generator triples") {
    const auto gens = generators(4);
    int triples = 0;
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens) {
                ++triples;
                const GenWord w{x, y, z};
                const YBElement nf = yb_normalize(w);
                CHECK(nf == rightmost_normal_form(w));
                CHECK(nf == multiply_yb(yb_normalize({x, y}), YBElement{YBWord{{z}}}));
                CHECK(nf == multiply_yb(YBElement{YBWord{{x}}}, yb_normalize({y, z})));
                for (const auto& t : nf) CHECK(t.admissible());
            }
    CHECK(triples == 216);
}

TEST_CASE("Yang-Baxter products stay associative at length four") {
    std::mt19937_64 rng(42);
    const auto gens = generators(4);
    for (int trial = 0; trial < 200; ++trial) {
        GenWord w;
        for (int n = 0; n < 4; ++n) w.push_back(gens[rng() % gens.size()]);
        CHECK(yb_normalize(w) == rightmost_normal_form(w));
        CHECK(yb_normalize(w) == multiply_yb(yb_normalize({w[0], w[1]}), yb_normalize({w[2], w[3]})));
    }
}

TEST_CASE("level-1 differential agrees with the coproduct") {
    const BarModel& model = bar4();
    CHECK(model.dim(0) == 6);
    CHECK(model.dim(1) == 25);
    CHECK(model.dim(2) == 90);
    CHECK(model.dim(3) == 301);
    for (const auto& w : model.basis(1)) {
        CAPTURE(w.to_string());
        CHECK(d_w1(WGen{w}) == d_w1_from_coproduct(model, WGen{w}));
    }
    CHECK(d_w1(WGen{YBWord::parse("B12.B12")}).size() == 1);
    CHECK(d_w1(WGen{YBWord::parse("B12.B34")}).size() == 2);
    CHECK(d_w1(WGen{YBWord::parse("B12.B13")}).size() == 2);
    CHECK(d_w1(WGen{YBWord::parse("B23.B13")}).size() == 3);
    CHECK_THROWS_AS(d_w1(WGen{YBWord::parse("B12")}), std::invalid_argument);
}

TEST_CASE("coproduct is coassociative on level 2") {
    const BarModel& model = bar4();
    const auto& c10 = model.coproduct_component(1, 0);
    const auto& c01 = model.coproduct_component(0, 1);
    const auto& c00 = model.coproduct_component(0, 0);
    for (std::size_t s = 0; s < model.dim(2); ++s) {
        std::map<std::tuple<int, int, int>, int> left, right;
        for (auto [u, v] : c10[s])
            for (auto [a, b] : c00[static_cast<std::size_t>(u)]) left[{a, b, v}] ^= 1;
        for (auto [u, v] : c01[s])
            for (auto [a, b] : c00[static_cast<std::size_t>(v)]) right[{u, a, b}] ^= 1;
        std::erase_if(left, [](const auto& e) { return e.second == 0; });
        std::erase_if(right, [](const auto& e) { return e.second == 0; });
        CHECK(left == right);
    }
}

TEST_CASE("twisting cochain") {
    const HomWH t = tau(bar4(), arnold4());
    CHECK(t.images == gf2::BitMatrix::identity(6));
    const auto tt = [&] {
        // τ ⋆ τ on W_1, read directly from the (0,0) component.
        gf2::BitMatrix m(bar4().dim(1), arnold4().dim(2));
        const auto& comp = bar4().coproduct_component(0, 0);
        for (std::size_t s = 0; s < comp.size(); ++s)
            for (auto [u, v] : comp[s])
                for (const auto& mono : arnold4().product(1, u, 1, v)) m.flip(s, static_cast<std::size_t>(arnold4().index_of(mono)));
        return m;
    }();
    CHECK(tt.is_zero());
}
