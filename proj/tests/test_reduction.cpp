#include <tame/reduction.hpp>

#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

namespace tame {
namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial UV(const char* s) { return parse_polynomial(s, {"u", "v"}); }

// Smallest residual degree reachable with the given support cap, computed
// with an independent Gauss-Jordan solve per candidate degree. Returns -1
// when even the top degree cannot be cancelled.
std::int64_t oracle_best_residual_degree(const PolyMap& F, std::size_t t, std::int64_t cap) {
    const std::size_t j = t == 0 ? 1 : 0;
    const std::size_t k = t == 2 ? 1 : 2;
    const std::int64_t dj = F[j].degree().value(), dk = F[k].degree().value();
    std::vector<Polynomial> cols;
    for (std::int64_t s = 0; s * dj <= cap; ++s)
        for (std::int64_t r = 0; s * dj + r * dk <= cap; ++r)
            cols.push_back(compose(Polynomial::term(1, Monomial{static_cast<Monomial::Exponent>(s),
                                                                static_cast<Monomial::Exponent>(r)}),
                                   {F[j], F[k]}));
    std::set<Monomial> monos;
    for (const auto& c : cols)
        for (const auto& [m, v] : c.terms()) monos.insert(m);
    for (const auto& [m, v] : F[t].terms()) monos.insert(m);

    const std::int64_t top = F[t].degree().value();
    std::int64_t best = -1;
    for (std::int64_t d = top; d >= 1; --d) {
        std::vector<std::vector<Rational>> aug;
        for (const auto& m : monos) {
            if (static_cast<std::int64_t>(m.degree()) < d) continue;
            std::vector<Rational> row;
            for (const auto& c : cols) row.push_back(c.coefficient(m));
            row.push_back(F[t].coefficient(m));
            aug.push_back(std::move(row));
        }
        if (!testing::oracle_consistent(aug, cols.size())) break;
        best = d - 1;
    }
    return best;
}

TEST(Reduction, SimpleConstructedCase) {
    const PolyMap F{{P("x"), P("y + x^2"), P("z")}};
    const auto r = find_elementary_reduction({F, 1, 4});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->g, UV("u^2"));
    EXPECT_EQ(r->residual, P("y"));
    EXPECT_EQ(r->residual_degree, Degree(1));
    EXPECT_EQ(r->first_arg, 0u);
    EXPECT_EQ(r->second_arg, 2u);
}

TEST(Reduction, ExampleRecovery) {
    const PolyMap F = build_example_map();
    const auto r = find_elementary_reduction({F, 1, 50});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->g, UV("256/25*u^5 + v^2"));
    EXPECT_EQ(r->residual, P("z + 3*x^2*y + 3*x*y^3 + y^5"));
    EXPECT_EQ(r->residual_degree, Degree(5));
}

TEST(Reduction, IdentityHasNoReduction) {
    const PolyMap I = PolyMap::identity(3);
    EXPECT_FALSE(find_elementary_reduction({I, 0, 2}).has_value());
    EXPECT_FALSE(find_any_reduction(I).has_value());
}

TEST(Reduction, TargetInGeneratedAlgebraIsRejected) {
    // F_3 - F_1 F_2 is a constant.
    const PolyMap F{{P("x"), P("y"), P("x*y + 1")}};
    EXPECT_FALSE(find_elementary_reduction({F, 2, 4}).has_value());
}

TEST(Reduction, InputValidation) {
    const PolyMap F{{P("x"), P("y + x^2"), P("z")}};
    EXPECT_THROW(find_elementary_reduction({F, 3, 4}), DomainError);
    EXPECT_THROW(find_elementary_reduction({F, 1, 1}), DomainError);
    EXPECT_THROW(find_elementary_reduction({PolyMap{{P("x"), P("x"), P("z")}}, 2, 4}), DomainError);
    EXPECT_THROW(find_elementary_reduction({PolyMap{{P("x"), P("y")}}, 0, 4}), DomainError);
    EXPECT_THROW(find_elementary_reduction({PolyMap{{P("x"), P("1"), P("z^2")}}, 2, 4}), DomainError);
}

TEST(FindAny, Example) {
    const PolyMap F = build_example_map();
    const auto r = find_any_reduction(F, 50);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->first, 1u);
    EXPECT_EQ(r->second.g, UV("256/25*u^5 + v^2"));
}

TEST(FindAny, TriangularMap) {
    const PolyMap F{{P("x + z^3"), P("y + z^5"), P("z") + pow(P("x + z^3"), 2) * P("y + z^5")}};
    const auto r = find_any_reduction(F);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->first, 2u);
    EXPECT_EQ(r->second.g, UV("u^2*v"));
    EXPECT_EQ(r->second.residual, P("z"));
}

TEST(FindAny, ExplicitCapSkipsHighTargets) {
    const PolyMap F{{P("x"), P("y + x^2"), P("z + x^5")}};
    const auto r = find_any_reduction(F, 3);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->first, 1u);
}

class ReductionProperties : public ::testing::Test {
protected:
    testing::Rng rng{777};

    PolyMap random_small_map() {
        for (;;) {
            TameWord w = testing::random_word(rng, static_cast<std::size_t>(testing::uniform(rng, 1, 3)), 2, false);
            PolyMap F = compose_word(w);
            if (F[0] == F[1] || F[0] == F[2] || F[1] == F[2]) continue;
            bool ok = true;
            for (const auto& c : F.components) ok = ok && c.degree() >= Degree(1) && c.degree() <= Degree(6);
            if (ok) return F;
        }
    }
};

TEST_F(ReductionProperties, SoundAndMatchesOracle) {
    int found = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const PolyMap F = random_small_map();
        std::vector<std::size_t> nonlinear;
        for (std::size_t i = 0; i < 3; ++i)
            if (F[i].degree() > Degree(1)) nonlinear.push_back(i);
        if (nonlinear.empty()) continue;
        const std::size_t t =
            nonlinear[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<std::int64_t>(nonlinear.size()) - 1))];
        const std::int64_t cap = 2 * F[t].degree().value();
        const auto r = find_elementary_reduction({F, t, cap});
        const std::int64_t oracle = oracle_best_residual_degree(F, t, cap);
        if (!r) {
            // Either nothing cancels, or everything cancels down to a constant.
            ASSERT_TRUE(oracle == -1 || oracle == 0) << oracle;
            continue;
        }
        ++found;
        ASSERT_LT(r->residual_degree, F[t].degree());
        ASSERT_EQ(r->residual, F[t] - compose(r->g, {F[r->first_arg], F[r->second_arg]}));
        ASSERT_EQ(r->residual_degree, Degree(oracle));
        for (const auto& [m, c] : r->g.terms())
            ASSERT_LE(static_cast<std::int64_t>(m[0]) * F[r->first_arg].degree().value() +
                          static_cast<std::int64_t>(m[1]) * F[r->second_arg].degree().value(),
                      cap);
    }
    EXPECT_GT(found, 40);
}

TEST_F(ReductionProperties, NonlinearTameMapsReduce) {
    for (int iter = 0; iter < 60; ++iter) {
        const PolyMap F = random_small_map();
        bool linear = true;
        for (const auto& c : F.components) linear = linear && c.degree() == Degree(1);
        if (linear) continue;
        ASSERT_TRUE(find_any_reduction(F).has_value())
            << print_polynomial(F[0]) << " | " << print_polynomial(F[1]) << " | " << print_polynomial(F[2]);
    }
}

} // namespace
} // namespace tame
