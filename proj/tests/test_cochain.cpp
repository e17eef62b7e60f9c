#include <doctest.h>

#include <random>
#include <stdexcept>
#include <tuple>

#include "confobs/cochain.hpp"

using namespace confobs;

namespace {

Cochain random_cochain(int k, int t, int l, std::mt19937_64& rng, double density = 0.3) {
    std::bernoulli_distribution coin(density);
    Cochain c = zero_cochain(k, t, l);
    const auto n = complex_table(k, t, l).size();
    for (SimplexId id = 0; id < n; ++id)
        if (coin(rng)) c.support.push_back(id);
    return c;
}

bool value(const Cochain& c, const Simplex& s) {
    const auto id = c.table().find(s);
    return id && std::binary_search(c.support.begin(), c.support.end(), *id);
}

// Coboundary straight from the face formula over the target table.
Cochain face_formula_coboundary(const Cochain& c) {
    Cochain out = zero_cochain(c.arity, c.complexity, c.degree + 1);
    const auto& table = out.table();
    for (SimplexId id = 0; id < table.size(); ++id) {
        bool v = false;
        for (const auto& f : faces(table.simplex(id)))
            if (f.simplex) v ^= value(c, *f.simplex);
        if (v) out.support.push_back(id);
    }
    return out;
}

// Alexander-Whitney product evaluated on every simplex of the target table.
Cochain front_back_cup(const Cochain& a, const Cochain& b) {
    Cochain out = zero_cochain(a.arity, a.complexity, a.degree + b.degree);
    const auto& table = out.table();
    for (SimplexId id = 0; id < table.size(); ++id) {
        const Simplex s = table.simplex(id);
        const Simplex front(std::vector<Perm>(s.levels.begin(), s.levels.begin() + a.degree + 1));
        const Simplex back(std::vector<Perm>(s.levels.begin() + a.degree, s.levels.end()));
        if (value(a, front) && value(b, back)) out.support.push_back(id);
    }
    return out;
}

}  // namespace

TEST_CASE("displayed arity-3 identities") {
    // A=123 B=132 C=213 D=231 E=312 F=321
    CHECK(coboundary(ar()) == parse_cochain("132|312|231 + 132|312|321 + 123|132|312 + 213|132|312", 3, 2, 2));
    CHECK(cup(omega(3, 1, 3), omega(3, 1, 2)) == parse_cochain("123|312|321 + 132|312|321 + 132|312|231", 3, 2, 2));
    CHECK(cup(omega(3, 2, 3), omega(3, 1, 2)) == parse_cochain("123|132|321 + 123|312|321", 3, 2, 2));
    CHECK(cup(omega(3, 2, 3), omega(3, 1, 3)) == parse_cochain("123|132|312 + 123|132|321 + 213|132|312", 3, 2, 2));
    CHECK(coboundary(ar()) == cup(omega(3, 1, 3), omega(3, 1, 2)) + cup(omega(3, 2, 3), omega(3, 1, 2)) +
                                  cup(omega(3, 2, 3), omega(3, 1, 3)));
    CHECK(pullback_triple(4, 1, 2, 3, parse_cochain("312", 3, 2, 0)) ==
          parse_cochain("4312 + 3412 + 3142 + 3124", 4, 2, 0));
}

TEST_CASE("omega supports") {
    CHECK(omega(3, 1, 2).support.size() == 9);
    CHECK(omega(4, 1, 2).support.size() == 144);
    CHECK(omega(4, 2, 4).support.size() == 144);
    CHECK(omega(4, 3, 1).support.size() == 144);
    CHECK(coboundary(omega(4, 3, 1) + omega(4, 1, 3)).is_zero());
    CHECK(omega(2, 1, 2) == parse_cochain("12|21", 2, 2, 1));
    CHECK(omega(4, 1, 2) == pullback_pair(4, 1, 2, parse_cochain("12|21", 2, 2, 1)));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(coboundary(omega(4, i, j)).is_zero());
    CHECK_THROWS_AS(omega(4, 2, 2), std::invalid_argument);
}

TEST_CASE("coboundary against the face formula, d^2 = 0") {
    std::mt19937_64 rng(31);
    for (auto [k, t, l] : {std::tuple{3, 2, 0}, std::tuple{3, 2, 1}, std::tuple{4, 2, 1}, std::tuple{4, 2, 3},
                           std::tuple{3, 3, 2}, std::tuple{3, 3, 4}}) {
        for (int trial = 0; trial < 3; ++trial) {
            const Cochain c = random_cochain(k, t, l, rng);
            const Cochain dc = coboundary(c);
            CHECK(dc == face_formula_coboundary(c));
            if (l + 2 <= top_degree(k, t)) CHECK(coboundary(dc).is_zero());
        }
    }
    CHECK_THROWS_AS(coboundary(zero_cochain(3, 2, 3)), std::invalid_argument);
}

TEST_CASE("boundary is adjoint to coboundary") {
    std::mt19937_64 rng(32);
    for (auto [k, t, l] : {std::tuple{3, 2, 1}, std::tuple{4, 2, 2}, std::tuple{3, 3, 3}}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Cochain c = random_cochain(k, t, l, rng);
            const Chain z = random_cochain(k, t, l + 1, rng);
            CHECK(pair(coboundary(c), z) == pair(c, boundary(z)));
        }
        const Chain z = random_cochain(k, t, l + 1, rng);
        if (l >= 1) CHECK(boundary(boundary(z)).is_zero());
    }
}

TEST_CASE("cup product against front/back evaluation, Leibniz and associativity") {
    std::mt19937_64 rng(33);
    for (auto [k, t, p, q] : {std::tuple{3, 2, 1, 1}, std::tuple{3, 2, 1, 2}, std::tuple{4, 2, 1, 1},
                              std::tuple{4, 2, 2, 1}, std::tuple{3, 3, 2, 2}}) {
        const Cochain a = random_cochain(k, t, p, rng), b = random_cochain(k, t, q, rng);
        const Cochain ab = cup(a, b);
        CHECK(ab == front_back_cup(a, b));
        if (p + q < top_degree(k, t)) CHECK(coboundary(ab) == cup(coboundary(a), b) + cup(a, coboundary(b)));
    }
    const Cochain a = random_cochain(4, 2, 1, rng), b = random_cochain(4, 2, 1, rng), c = random_cochain(4, 2, 2, rng);
    CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
}

TEST_CASE("Steenrod relation on omega cocycles") {
    for (int k : {3, 4}) {
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                for (int u = 1; u <= k; ++u)
                    for (int v = u + 1; v <= k; ++v) {
                        const Cochain a = omega(k, i, j), b = omega(k, u, v);
                        CHECK(coboundary(cup1(a, b)) == cup(a, b) + cup(b, a));
                    }
    }
    CHECK_THROWS_AS(cup1(omega(3, 1, 2), zero_cochain(3, 2, 2)), std::invalid_argument);
}

TEST_CASE("pullbacks are cochain maps and ring maps") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 4; ++trial) {
        const Cochain a = random_cochain(3, 2, 1, rng), b = random_cochain(3, 2, 1, rng);
        for (auto [x, y, z] : {std::tuple{1, 2, 3}, std::tuple{2, 1, 4}, std::tuple{4, 3, 1}}) {
            const auto pb = [&](const Cochain& c) { return pullback_triple(4, x, y, z, c); };
            CHECK(pb(cup(a, b)) == cup(pb(a), pb(b)));
            CHECK(pb(coboundary(a)) == coboundary(pb(a)));
        }
    }
    const Cochain g = random_cochain(2, 3, 1, rng, 0.5);
    CHECK(pullback_pair(3, 1, 3, coboundary(g)) == coboundary(pullback_pair(3, 1, 3, g)));
    CHECK_THROWS_AS(pullback_triple(4, 1, 2, 3, omega(4, 1, 2)), std::invalid_argument);
}

TEST_CASE("coboundary matrices") {
    for (auto [k, t, l] : {std::tuple{3, 2, 1}, std::tuple{4, 2, 1}, std::tuple{4, 2, 2}, std::tuple{3, 3, 3}}) {
        const auto m = coboundary_matrix(k, t, l);
        CHECK(m == coboundary_matrix_serial(k, t, l));
        CHECK(m.rows() == complex_table(k, t, l + 1).size());
        CHECK(m.cols() == complex_table(k, t, l).size());
    }
    std::mt19937_64 rng(35);
    const Cochain c = random_cochain(4, 2, 1, rng);
    CHECK(to_bits(coboundary(c)) == coboundary_matrix(4, 2, 1).multiply(to_bits(c)));
    CHECK(coboundary_matrix(4, 2, 1).rows() == 2496);
    CHECK(coboundary_matrix(4, 2, 2).rows() == 4704);
}

TEST_CASE("text and bit round trips") {
    std::mt19937_64 rng(36);
    const Cochain c = random_cochain(3, 2, 2, rng);
    CHECK(parse_cochain(format(c), 3, 2, 2) == c);
    CHECK(from_bits(3, 2, 2, to_bits(c)) == c);
    CHECK(format(zero_cochain(3, 2, 1)) == "0");
    CHECK(parse_cochain("0", 3, 2, 1).is_zero());
    CHECK(parse_cochain("12|21 + 12|21", 2, 2, 1).is_zero());
    CHECK_THROWS_AS(parse_cochain("123|321|123", 3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(c + zero_cochain(3, 2, 1), std::invalid_argument);
}
