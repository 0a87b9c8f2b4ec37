#include <tame/parser.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace tame {
namespace {

TEST(Parser, ParsesExampleG) {
    const Polynomial g = parse_polynomial("z + 3*x^2*y + 3*x*y^3 + y^5");
    EXPECT_EQ(g.size(), 4u);
    EXPECT_EQ(g.coefficient(Monomial{2, 1, 0}), Rational(3));
    EXPECT_EQ(g.coefficient(Monomial{1, 3, 0}), Rational(3));
    EXPECT_EQ(g.coefficient(Monomial{0, 5, 0}), Rational(1));
    EXPECT_EQ(g.coefficient(Monomial{0, 0, 1}), Rational(1));
}

TEST(Parser, Zero) {
    EXPECT_TRUE(parse_polynomial("0").is_zero());
    EXPECT_TRUE(parse_polynomial("x - x").is_zero());
}

TEST(Parser, RationalCoefficients) {
    const Polynomial p = parse_polynomial("256/25 * x^5 - 16/5");
    EXPECT_EQ(p.coefficient(Monomial{5, 0, 0}), Rational(256, 25));
    EXPECT_EQ(p.coefficient(Monomial{0, 0, 0}), Rational(-16, 5));
    EXPECT_EQ(parse_polynomial("6/4*y").coefficient(Monomial{0, 1, 0}), Rational(3, 2));
}

TEST(Parser, ImplicitMultiplication) {
    EXPECT_EQ(parse_polynomial("3x^2y + 3xy^3"), parse_polynomial("3*x^2*y + 3*x*y^3"));
    EXPECT_EQ(parse_polynomial("-30x^2y^4 + 2 z"), parse_polynomial("-30*x^2*y^4 + 2*z"));
    EXPECT_EQ(parse_polynomial("x*x*y"), parse_polynomial("x^2*y"));
}

TEST(Parser, LongVariableNames) {
    const VariableNames vars{"a1", "a2", "b"};
    const Polynomial p = parse_polynomial("a1^2*a2 - b", vars);
    EXPECT_EQ(print_polynomial(p, vars), "a1^2*a2 - b");
}

TEST(Parser, BigCoefficients) {
    const Polynomial p = parse_polynomial("123456789012345678901234567891/7*x");
    EXPECT_EQ(print_polynomial(p), "123456789012345678901234567891/7*x");
}

TEST(Parser, CanonicalPrint) {
    EXPECT_EQ(print_polynomial(Polynomial(3)), "0");
    EXPECT_EQ(print_polynomial(parse_polynomial("z + 3*x^2*y + 3*x*y^3 + y^5")), "y^5 + 3*x*y^3 + 3*x^2*y + z");
    EXPECT_EQ(print_polynomial(parse_polynomial("-x + 1/2 - y^2")), "-y^2 - x + 1/2");
    EXPECT_EQ(print_polynomial(parse_polynomial("-5")), "-5");
}

struct BadInput {
    const char* text;
    std::size_t column;
    const char* message;
};

class ParserErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParserErrors, ReportsPosition) {
    const auto& bad = GetParam();
    try {
        parse_polynomial(bad.text);
        FAIL() << "expected a parse error for '" << bad.text << "'";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), bad.column) << e.what();
        EXPECT_NE(std::string(e.what()).find(bad.message), std::string::npos) << e.what();
    }
}

INSTANTIATE_TEST_SUITE_P(
    Inputs, ParserErrors,
    ::testing::Values(BadInput{"x + w", 5, "unknown identifier"}, BadInput{"3/0*x", 1, "zero denominator"},
                      BadInput{"3/ + x", 1, "malformed rational"}, BadInput{"x^99999999999", 3, "exponent overflow"},
                      BadInput{"x +", 4, "expected a number or variable"}, BadInput{"", 1, "empty"},
                      BadInput{"x ** y", 4, "unexpected character"}, BadInput{"(x + y)", 1, "unexpected character"},
                      BadInput{"x^", 3, "expected exponent"}, BadInput{"x 3", 3, "unexpected character"}));

TEST(Parser, ErrorLineIsCarried) {
    try {
        parse_polynomial("x + ?", default_variables(3), 7);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 7u);
        EXPECT_EQ(e.column(), 5u);
    }
}

TEST(Parser, RejectsBadVariableLists) {
    EXPECT_THROW(parse_polynomial("x", {"x", "x"}), DomainError);
    EXPECT_THROW(parse_polynomial("x", {"1x"}), DomainError);
    EXPECT_THROW(parse_polynomial("x", {}), DomainError);
}

TEST(Parser, MapFile) {
    const std::string text =
        "# a triangular map\n"
        "vars: x, y, z\n"
        "x + z^3   # first\n"
        "\n"
        "y + z^5\n"
        "z\n";
    const PolynomialList list = parse_map_file(text);
    EXPECT_EQ(list.variables, (VariableNames{"x", "y", "z"}));
    ASSERT_EQ(list.polynomials.size(), 3u);
    EXPECT_EQ(list.polynomials[0], parse_polynomial("x + z^3"));
    EXPECT_EQ(parse_map_file(print_map_file(list.polynomials, list.variables)).polynomials, list.polynomials);
}

TEST(Parser, MapFileErrorsCarryLineNumbers) {
    try {
        parse_map_file("vars: x,y\nx + y\n\nx + q\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_EQ(e.column(), 5u);
    }
    EXPECT_THROW(parse_map_file("x + y\n"), ParseError);
    EXPECT_THROW(parse_map_file("vars: x,x\nx\n"), ParseError);
}

TEST(Parser, RoundTripProperty) {
    testing::Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        Polynomial p(3);
        const auto terms = testing::uniform(rng, 0, 8);
        for (std::int64_t t = 0; t < terms; ++t) {
            Rational c = testing::uniform(rng, 0, 1) ? testing::random_wide_integer(rng)
                                                     : testing::random_rational(rng, 1'000'000);
            if (testing::uniform(rng, 0, 3) == 0) {
                const Rational den = abs(testing::random_wide_integer(rng)) + 1;
                c /= den;
            }
            p.add_term(testing::random_monomial(rng, 3, 12), c);
        }
        const std::string text = print_polynomial(p);
        ASSERT_EQ(parse_polynomial(text), p) << text;
    }
}

} // namespace
} // namespace tame
