#include <tame/linsolve.hpp>

#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

namespace tame {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

bool satisfies(const Matrix& aug, const std::vector<Rational>& x) {
    for (const auto& row : aug) {
        Rational acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += row[j] * x[j];
        if (acc != row.back()) return false;
    }
    return true;
}

TEST(IntegerRows, ScalesToPrimitive) {
    const std::vector<Rational> row{Rational(1, 2), Rational(-3, 4), Rational(0), Rational(5, 6)};
    const IntRow r = to_integer_row(row);
    EXPECT_EQ(r, (IntRow{6, -9, 0, 10}));
    IntRow s{4, 8, -12};
    make_primitive(s);
    EXPECT_EQ(s, (IntRow{1, 2, -3}));
}

TEST(Solve, UniqueSolution) {
    const Matrix aug{{2, 1, 5}, {1, -1, 1}};
    const auto x = solve_exact(aug, 2);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Rational(2));
    EXPECT_EQ((*x)[1], Rational(1));
}

TEST(Solve, Inconsistent) {
    const Matrix aug{{1, 1, 1}, {2, 2, 3}};
    EXPECT_FALSE(solve_exact(aug, 2).has_value());
}

TEST(Solve, UnderdeterminedSetsFreeVariablesToZero) {
    const Matrix aug{{1, 2, 3, 6}};
    const auto x = solve_exact(aug, 3);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (std::vector<Rational>{6, 0, 0}));
}

TEST(Solve, EmptySystem) {
    const auto x = solve_exact({}, 2);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->size(), 2u);
}

TEST(Echelon, RankMatchesGaussJordan) {
    testing::Rng rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
        const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 7));
        Matrix m(rows, std::vector<Rational>(cols, Rational(0)));
        for (auto& r : m)
            for (auto& v : r)
                if (testing::uniform(rng, 0, 2) != 0) v = testing::random_rational(rng, 20);
        // Duplicate combinations lower the rank.
        if (rows > 2 && testing::uniform(rng, 0, 1)) {
            for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * 3 - m[1][j] / 2;
        }
        std::vector<IntRow> irows;
        for (const auto& r : m) irows.push_back(to_integer_row(r));
        const Echelon e = fraction_free_echelon(irows, cols);
        ASSERT_EQ(e.rank(), testing::rank_of(m, cols));
        for (std::size_t k = 1; k < e.pivots.size(); ++k) ASSERT_LT(e.pivots[k - 1], e.pivots[k]);
    }
}

TEST(Solve, AgreesWithGaussJordanOracle) {
    testing::Rng rng(11);
    int consistent = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
        const auto nvars = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
        Matrix aug(rows, std::vector<Rational>(nvars + 1, Rational(0)));
        for (auto& r : aug)
            for (auto& v : r)
                if (testing::uniform(rng, 0, 3) != 0) v = testing::random_rational(rng, 50);
        if (rows > 1 && testing::uniform(rng, 0, 1))
            for (std::size_t j = 0; j <= nvars; ++j) aug[rows - 1][j] = aug[0][j] * Rational(-7, 3);
        const bool want = testing::oracle_consistent(aug, nvars);
        const auto got = solve_exact(aug, nvars);
        ASSERT_EQ(got.has_value(), want);
        if (got) {
            ++consistent;
            ASSERT_TRUE(satisfies(aug, *got));
        }
    }
    EXPECT_GT(consistent, 100);
}

TEST(Solve, LargeEntriesStayExact) {
    // Hilbert matrix: ill-conditioned, exact solution known.
    const std::size_t n = 8;
    Matrix aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Rational b = 0;
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = Rational(1, static_cast<unsigned long>(i + j + 1));
            b += aug[i][j] * static_cast<long>(j + 1);
        }
        aug[i][n] = b;
    }
    const auto x = solve_exact(aug, n);
    ASSERT_TRUE(x.has_value());
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ((*x)[j], Rational(static_cast<long>(j + 1)));
}

} // namespace
} // namespace tame
