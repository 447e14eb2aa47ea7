#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfsuper/rational.hpp"
#include "gfsuper/sparse_matrix.hpp"

using gfsuper::Rational;
using gfsuper::SparseMatrix;

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((a - a).is_zero());
    CHECK(-a == Rational(-1, 3));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
}

TEST_CASE("rational parse and print round-trip") {
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational::parse(Rational(355, 113).str()) == Rational(355, 113));
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(3) > Rational(2));
}

static SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    SparseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (SparseMatrix::Index r = 0; r < rows.size(); ++r)
        for (SparseMatrix::Index c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0) m.set(r, c, Rational(rows[r][c]));
    return m;
}

TEST_CASE("rank of a small matrix with one relation") {
    auto m = from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(m.rank() == 2);
    CHECK(m.kernel_dim() == 1);
}

TEST_CASE("rank of zero and identity matrices") {
    SparseMatrix z(4, 7);
    CHECK(z.rank() == 0);
    CHECK(z.kernel_dim() == 7);
    SparseMatrix id(5, 5);
    for (SparseMatrix::Index i = 0; i < 5; ++i) id.set(i, i, Rational(1));
    CHECK(id.rank() == 5);
    CHECK(id.kernel_dim() == 0);
}

TEST_CASE("rank detects rational cancellation") {
    // Hilbert 5x5 is famously ill-conditioned in floating point but has full rank.
    SparseMatrix h(5, 5);
    for (SparseMatrix::Index i = 0; i < 5; ++i)
        for (SparseMatrix::Index j = 0; j < 5; ++j) h.set(i, j, Rational(1, i + j + 1));
    CHECK(h.rank() == 5);

    // Append the sum of all rows: rank must stay 5.
    SparseMatrix h2(6, 5);
    for (SparseMatrix::Index i = 0; i < 5; ++i)
        for (SparseMatrix::Index j = 0; j < 5; ++j) {
            h2.set(i, j, Rational(1, i + j + 1));
            h2.add(5, j, Rational(1, i + j + 1));
        }
    CHECK(h2.rank() == 5);
}

static SparseMatrix random_matrix(std::mt19937& rng, unsigned nr, unsigned nc, int density_pct) {
    SparseMatrix m(nr, nc);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3), pct(0, 99);
    for (unsigned r = 0; r < nr; ++r)
        for (unsigned c = 0; c < nc; ++c)
            if (pct(rng) < density_pct) m.set(r, c, Rational(num(rng), den(rng)));
    return m;
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        unsigned nr = 1 + rng() % 8, nc = 1 + rng() % 8;
        auto m = random_matrix(rng, nr, nc, 55);
        auto r = m.rank();
        CHECK(r == m.transpose().rank());
        CHECK(r + m.kernel_dim() == m.ncols());
        CHECK(r <= std::min(nr, nc));

        auto b = random_matrix(rng, nc, 1 + rng() % 8, 55);
        auto prod = m * b;
        CHECK(prod.rank() <= std::min(r, b.rank()));
    }
}

TEST_CASE("rank is invariant under row scaling and permutation") {
    std::mt19937 rng(99);
    auto m = random_matrix(rng, 6, 6, 60);
    auto r = m.rank();

    SparseMatrix scaled(6, 6);
    for (const auto& [rc, v] : m.entries())
        scaled.set(rc.first, rc.second, v * Rational(rc.first + 1, 7));
    CHECK(scaled.rank() == r);

    SparseMatrix perm(6, 6);
    for (const auto& [rc, v] : m.entries()) perm.set((rc.first + 3) % 6, rc.second, v);
    CHECK(perm.rank() == r);
}

TEST_CASE("independent_columns picks the lexicographically first basis") {
    auto m = from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(m.independent_columns() == std::vector<SparseMatrix::Index>{0, 1});

    // Column 1 duplicates column 0; column 2 is new.
    auto dup = from_rows({{1, 1, 0}, {2, 2, 1}});
    CHECK(dup.independent_columns() == std::vector<SparseMatrix::Index>{0, 2});

    SparseMatrix z(3, 4);
    CHECK(z.independent_columns().empty());
}

TEST_CASE("independent_columns agrees with rank") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 2 + rng() % 6, 2 + rng() % 6, 50);
        CHECK(m.independent_columns().size() == m.rank());
    }
}

TEST_CASE("matrix algebra basics") {
    auto a = from_rows({{1, 2}, {3, 4}});
    auto b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
    CHECK(a - a == SparseMatrix(2, 2));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(2)) == from_rows({{2, 4}, {6, 8}}));
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(a.nnz() == 4);
    CHECK(a.at(0, 1) == Rational(2));
    CHECK(a.at(1, 0) == Rational(3));
}
