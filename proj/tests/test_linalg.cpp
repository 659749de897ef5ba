#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aq/linalg.hpp"
#include "aq/sparse_rank.hpp"

#include <random>

using namespace aq;

TEST_CASE("rank: empty, identity, rank-1 over F_2")
{
    CHECK(rank(FpMatrix(2, 0, 0)) == 0);
    CHECK(rank(FpMatrix::identity(2, 3)) == 3);
    FpMatrix m(2, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    CHECK(rank(m) == 1); /* hand row-reduction: rows equal */
}

TEST_CASE("kernel_basis basics")
{
    CHECK(kernel_basis(FpMatrix::identity(2, 4)).empty());
    CHECK(kernel_basis(FpMatrix(2, 2, 3)).size() == 3);

    FpMatrix m(2, 1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    /* the only nonzero kernel vector of [[1,1]] over F_2, found by
     * enumerating all four vectors, is (1,1) */
    CHECK(k[0] == std::vector<uint32_t>{1, 1});
}

TEST_CASE("solve: identity, zero, tie-break")
{
    FpMatrix id = FpMatrix::identity(5, 3);
    std::vector<uint32_t> b{2, 0, 4};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    FpMatrix z(3, 2, 2);
    CHECK(!solve(z, {1, 0}).has_value());

    FpMatrix m(2, 1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    auto y = solve(m, {1});
    REQUIRE(y.has_value());
    /* enumerated solutions are (1,0) and (0,1); pivot-first with free
     * variables zero picks (1,0) */
    CHECK(*y == std::vector<uint32_t>{1, 0});
}

TEST_CASE("quotient_basis")
{
    auto q0 = quotient_basis({}, 2, 2);
    CHECK(q0.basis_index.size() == 2);
    CHECK(q0.projection == FpMatrix::identity(2, 2));

    auto q1 = quotient_basis({{1, 0}, {0, 1}}, 2, 3);
    CHECK(q1.basis_index.empty());

    auto q2 = quotient_basis({{1, 1, 0}}, 3, 2);
    CHECK(q2.basis_index.size() == 2);
    /* projection kills (1,1,0): checked against full kernel enumeration */
    CHECK(q2.projection.apply({1, 1, 0}) == std::vector<uint32_t>(2, 0));
    int nonzero = 0;
    for (uint32_t a = 0; a < 2; ++a)
        for (uint32_t b = 0; b < 2; ++b)
            for (uint32_t c = 0; c < 2; ++c) {
                auto img = q2.projection.apply({a, b, c});
                bool zero = img[0] == 0 && img[1] == 0;
                bool in_span = (a == b && c == 0);
                CHECK(zero == in_span);
                if (!zero)
                    ++nonzero;
            }
    CHECK(nonzero == 6);
}

TEST_CASE("rank-nullity on random F_2 matrices up to 12x12")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        size_t r = rng() % 13, c = rng() % 13;
        FpMatrix m(2, r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                m.set(i, j, rng() & 1);
        CHECK(rank(m) + kernel_basis(m).size() == c);

        /* solve(M, Mx) reproduces the image vector */
        std::vector<uint32_t> x(c);
        for (auto& v : x)
            v = rng() & 1;
        auto b = m.apply(x);
        auto x2 = solve(m, b);
        REQUIRE(x2.has_value());
        CHECK(m.apply(*x2) == b);
    }
}

TEST_CASE("quotient projection kills exactly the span (random, F_3)")
{
    std::mt19937 rng(999);
    for (int trial = 0; trial < 50; ++trial) {
        size_t dim = 1 + rng() % 8, nsub = rng() % 5;
        std::vector<std::vector<uint32_t>> sub(nsub, std::vector<uint32_t>(dim));
        for (auto& v : sub)
            for (auto& e : v)
                e = rng() % 3;
        auto q = quotient_basis(sub, dim, 3);
        FpMatrix subm = FpMatrix::from_rows(3, sub, dim);
        CHECK(q.basis_index.size() == dim - rank(subm));
        for (auto& v : sub)
            CHECK(q.projection.apply(v) == std::vector<uint32_t>(q.basis_index.size(), 0));
    }
}

TEST_CASE("sparse rank agrees with dense on random matrices")
{
    std::mt19937 rng(777);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
            FpMatrix m(p, r, c);
            SparseRank sr(p, r);
            for (size_t j = 0; j < c; ++j) {
                std::vector<std::pair<uint32_t, uint32_t>> col;
                for (size_t i = 0; i < r; ++i) {
                    uint32_t v = (rng() % 4 == 0) ? rng() % p : 0;
                    m.set(i, j, v);
                    if (v)
                        col.emplace_back(static_cast<uint32_t>(i), v);
                }
                sr.add_column(std::move(col));
            }
            CHECK(sr.rank() == rank(m));
        }
    }
}

TEST_CASE("RowSpan incremental basis")
{
    RowSpan s(2, 3);
    CHECK(s.add({1, 1, 0}));
    CHECK(!s.add({1, 1, 0}));
    CHECK(s.add({0, 1, 1}));
    CHECK(s.contains({1, 0, 1}));
    CHECK(!s.contains({1, 0, 0}));
    CHECK(s.rank() == 2);
}
