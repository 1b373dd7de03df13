#include <zonalharm/poly_io.hpp>
#include <zonalharm/random.hpp>

#include <gtest/gtest.h>

using namespace zh;

TEST(ParsePolynomial, DocumentedExample)
{
    const auto p = parse_polynomial("3/2*x1^2*x2 - x3^3", 3);
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.coefficient(Monomial({2, 1, 0})), Rational(3, 2));
    EXPECT_EQ(p.coefficient(Monomial({0, 0, 3})), Rational(-1));
    EXPECT_EQ(p.size(), 2u);
}

TEST(ParsePolynomial, RepeatedVariablesAccumulate)
{
    EXPECT_EQ(parse_polynomial("x1*x1*x2", 2), parse_polynomial("x1^2*x2", 2));
    EXPECT_EQ(parse_polynomial("x1^2 + x1^2", 2), parse_polynomial("2*x1^2", 2));
}

TEST(ParsePolynomial, ConstantsAndSigns)
{
    EXPECT_EQ(parse_polynomial("-7/3", 3), HomogeneousPolynomial::constant(3, Rational(-7, 3)));
    EXPECT_EQ(parse_polynomial("  - x1 +x2 ", 2).coefficient(Monomial({1, 0})), Rational(-1));
    EXPECT_TRUE(parse_polynomial("0", 4).is_zero());
}

TEST(ParsePolynomial, ErrorsReportPosition)
{
    try {
        parse_polynomial("x1^2 + x4", 3);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 8u);
    }
    try {
        parse_polynomial("x1^2 + x2", 3);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7u);
    }
    EXPECT_THROW(parse_polynomial("x1 ** x2", 3), ParseError);
    EXPECT_THROW(parse_polynomial("3/0*x1", 3), ParseError);
    EXPECT_THROW(parse_polynomial("y1", 3), ParseError);
    EXPECT_THROW(parse_polynomial("", 3), ParseError);
    EXPECT_THROW(parse_polynomial("x1 x2", 3), ParseError);
    EXPECT_THROW(parse_polynomial("x0", 3), ParseError);
}

TEST(ToText, Canonical)
{
    EXPECT_EQ(to_text(parse_polynomial("x3^3 - 3/2*x2*x1^2", 3)), "-3/2*x1^2*x2 + x3^3");
    EXPECT_EQ(to_text(HomogeneousPolynomial::constant(2, 1)), "1");
    EXPECT_EQ(to_text(HomogeneousPolynomial(2, 3)), "0");
}

TEST(ToText, RoundTrip)
{
    CaseRng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.integer(1, 7);
        const auto p = random_polynomial(rng, d, rng.integer(0, 8), 6);
        EXPECT_EQ(parse_polynomial(to_text(p), d), p);
    }
}

TEST(Json, DocumentedShape)
{
    const auto j = to_json(parse_polynomial("3/2*x1^2*x2 - x3^3", 3));
    EXPECT_EQ(j.at("d"), 3);
    EXPECT_EQ(j.at("l"), 3);
    ASSERT_EQ(j.at("terms").size(), 2u);
    EXPECT_EQ(j.at("terms")[0].at("e"), nlohmann::json::array({2, 1, 0}));
    EXPECT_EQ(j.at("terms")[0].at("c"), "3/2");
    EXPECT_EQ(j.at("terms")[1].at("c"), "-1");
}

TEST(Json, RoundTrip)
{
    CaseRng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.integer(1, 7);
        const auto p = random_polynomial(rng, d, rng.integer(0, 8), 6);
        EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(to_json(p).dump())), p);
    }
}
