#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "confobs/gf2.hpp"

using namespace confobs::gf2;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng)) m.set(i, j);
    return m;
}

// Rank as log2 of the size of the row span, by listing every combination.
std::size_t brute_rank(const BitMatrix& m) {
    std::set<std::vector<bool>> span;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m.rows()); ++mask) {
        std::vector<bool> v(m.cols(), false);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (mask >> r & 1U)
                for (std::size_t c = 0; c < m.cols(); ++c) v[c] = v[c] != m.get(r, c);
        span.insert(v);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

// Plain elimination on bool vectors, no word packing.
std::size_t naive_rank(const BitMatrix& m) {
    std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && !a[p][c]) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = a[r][k] != a[rank][k];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("bit vector basics") {
    BitVector v = BitVector::from_string("10110");
    CHECK(v.size() == 5);
    CHECK(v.popcount() == 3);
    CHECK(v.to_string() == "10110");
    v.flip(0);
    CHECK(v.to_string() == "00110");
    CHECK((v ^ v).any() == false);
    CHECK_THROWS_AS(BitVector::from_string("102"), std::invalid_argument);
    BitVector w(3);
    CHECK_THROWS_AS(v ^= w, std::invalid_argument);
}

TEST_CASE("rank matches span enumeration on small matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 4;
        const auto m = random_matrix(r, c, rng);
        CHECK(rank(m) == brute_rank(m));
    }
}

TEST_CASE("rank of larger matrices against naive elimination") {
    std::mt19937_64 rng(12);
    for (auto [r, c, d] : {std::tuple{70, 130, 0.5}, std::tuple{300, 200, 0.02}, std::tuple{600, 700, 0.01},
                           std::tuple{1200, 900, 0.003}}) {
        const auto m = random_matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c), rng, d);
        const auto expected = naive_rank(m);
        CHECK(rank(m) == expected);
        CHECK(rank(m.transpose()) == expected);
    }
}

TEST_CASE("edge shapes") {
    CHECK(rank(BitMatrix(0, 0)) == 0);
    CHECK(rank(BitMatrix(5, 0)) == 0);
    CHECK(rank(BitMatrix(0, 7)) == 0);
    CHECK(rank(BitMatrix(4, 4)) == 0);
    CHECK(rank(BitMatrix::identity(65)) == 65);
    CHECK(kernel_basis(BitMatrix(3, 4)).size() == 4);
    const auto x = solve(BitMatrix(3, 2), BitVector(3));
    REQUIRE(x.has_value());
    CHECK_FALSE(x->any());
}

TEST_CASE("solve agrees with exhaustive search") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 4;
        const auto m = random_matrix(r, c, rng);
        BitVector b(r);
        for (std::size_t i = 0; i < r; ++i)
            if (rng() & 1U) b.set(i);
        bool solvable = false;
        for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
            BitVector x(c);
            for (std::size_t j = 0; j < c; ++j)
                if (mask >> j & 1U) x.set(j);
            if (m.multiply(x) == b) solvable = true;
        }
        const auto x = solve(m, b);
        CHECK(x.has_value() == solvable);
        if (x) CHECK(m.multiply(*x) == b);
    }
}

TEST_CASE("solve_many matches repeated solve") {
    std::mt19937_64 rng(14);
    const auto m = random_matrix(150, 90, rng, 0.05);
    std::vector<BitVector> rhs;
    for (int n = 0; n < 12; ++n) {
        BitVector x(90);
        for (std::size_t j = 0; j < 90; ++j)
            if (rng() % 3 == 0) x.set(j);
        rhs.push_back(n % 2 == 0 ? m.multiply(x) : BitVector::from_string(std::string(150, '1')));
    }
    const auto many = solve_many(m, rhs);
    REQUIRE(many.size() == rhs.size());
    for (std::size_t n = 0; n < rhs.size(); ++n) {
        const auto one = solve(m, rhs[n]);
        CHECK(one.has_value() == many[n].has_value());
        if (many[n]) CHECK(m.multiply(*many[n]) == rhs[n]);
    }
    CHECK_THROWS_AS(solve(m, BitVector(3)), std::invalid_argument);
}

TEST_CASE("kernel basis spans the null space") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(40 + rng() % 40, 60 + rng() % 80, rng, 0.1);
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == m.cols() - rank(m));
        for (const auto& v : ker) CHECK_FALSE(m.multiply(v).any());
        BitMatrix k(ker.size(), m.cols());
        for (std::size_t i = 0; i < ker.size(); ++i) k.set_row(i, ker[i]);
        CHECK(rank(k) == ker.size());
    }
}

TEST_CASE("row reduction is reduced echelon") {
    std::mt19937_64 rng(16);
    const auto m = random_matrix(30, 50, rng, 0.2);
    const auto e = row_reduce(m);
    CHECK(e.pivot_cols.size() == rank(m));
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (i > 0) CHECK(e.pivot_cols[i] > e.pivot_cols[i - 1]);
        for (std::size_t r = 0; r < e.reduced.rows(); ++r) CHECK(e.reduced.get(r, e.pivot_cols[i]) == (r == i));
    }
}

TEST_CASE("matrix products") {
    std::mt19937_64 rng(17);
    const auto a = random_matrix(20, 30, rng), b = random_matrix(30, 10, rng);
    const auto ab = a.multiply(b);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            bool s = false;
            for (std::size_t k = 0; k < 30; ++k) s ^= a.get(i, k) && b.get(k, j);
            CHECK(ab.get(i, j) == s);
        }
    CHECK(a.transpose().transpose() == a);
    CHECK(BitMatrix::from_rows({"101", "011"}).get(1, 2));
    CHECK_THROWS_AS(BitMatrix::from_rows({"10", "011"}), std::invalid_argument);
    CHECK_THROWS_AS(a.multiply(a), std::invalid_argument);
}
