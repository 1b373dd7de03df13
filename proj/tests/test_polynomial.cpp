#include <zonalharm/poly_io.hpp>
#include <zonalharm/polynomial.hpp>
#include <zonalharm/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace zh;

namespace {

HomogeneousPolynomial poly(const char* text, int d) { return parse_polynomial(text, d); }

Rational random_scalar(CaseRng& rng) { return random_coefficient(rng); }

} // namespace

TEST(Laplacian, RSquaredIsTwiceDimension)
{
    EXPECT_EQ(laplacian(HomogeneousPolynomial::r_squared(3)), HomogeneousPolynomial::constant(3, 6));
    EXPECT_EQ(laplacian(HomogeneousPolynomial::r_squared(7)), HomogeneousPolynomial::constant(7, 14));
}

TEST(Laplacian, MixedMonomialIsHarmonic)
{
    EXPECT_TRUE(laplacian(poly("x1*x2", 3)).is_zero());
}

TEST(Laplacian, FourthPower)
{
    EXPECT_EQ(laplacian(poly("x1^4", 3)), poly("12*x1^2", 3));
}

TEST(Laplacian, LowDegreeGivesZero)
{
    EXPECT_TRUE(laplacian(poly("x2", 4)).is_zero());
    EXPECT_TRUE(laplacian(HomogeneousPolynomial::constant(4, 5)).is_zero());
}

TEST(Laplacian, Linearity)
{
    CaseRng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = rng.integer(1, 6);
        const int l = rng.integer(0, 8);
        const auto p = random_polynomial(rng, d, l, 6);
        const auto q = random_polynomial(rng, d, l, 6);
        const Rational a = random_scalar(rng);
        const Rational b = random_scalar(rng);
        EXPECT_EQ(laplacian(a * p + b * q), a * laplacian(p) + b * laplacian(q));
    }
}

TEST(Laplacian, CommutatorWithRSquared)
{
    // Delta(r^2 P) - r^2 Delta P = (4l + 2d) P
    CaseRng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = rng.integer(2, 7);
        const int l = rng.integer(0, 7);
        const auto p = random_polynomial(rng, d, l, 5);
        const auto lhs = laplacian(mul_r2(p)) - mul_r2(laplacian(p));
        EXPECT_EQ(lhs, Rational(4 * l + 2 * d) * p) << to_text(p);
    }
}

TEST(MulR2, Examples)
{
    EXPECT_EQ(mul_r2(HomogeneousPolynomial::constant(3, 1)), poly("x1^2 + x2^2 + x3^2", 3));
    EXPECT_EQ(mul_r2(poly("x1", 3)), poly("x1^3 + x1*x2^2 + x1*x3^2", 3));
    EXPECT_EQ(mul_r2_power(poly("x1", 2), 2), poly("x1^5 + 2*x1^3*x2^2 + x1*x2^4", 2));
}

TEST(Evaluate, Examples)
{
    EXPECT_DOUBLE_EQ(evaluate(poly("x1^2", 3), std::vector<double>{2, 0, 0}), 4.0);
    EXPECT_EQ(evaluate(poly("3*x1*x2 - x3^2", 3), std::vector<double>{0, 0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(evaluate(poly("3/2*x1^2*x2 - x3^3", 3), std::vector<double>{1, 2, 3}), 3.0 - 27.0);
}

TEST(Evaluate, DimensionMismatch)
{
    EXPECT_THROW(evaluate(poly("x1", 3), std::vector<double>{1, 2}), DimensionMismatch);
}

TEST(Evaluate, RSquaredIsOneOnSphere)
{
    CaseRng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.integer(2, 8);
        const auto p = random_polynomial(rng, d, rng.integer(0, 7), 5);
        const auto xi = rng.sphere_point(d);
        const double a = evaluate(mul_r2(p), xi);
        const double b = evaluate(p, xi);
        EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST(HomogeneousPolynomial, RejectsWrongDegreeTerm)
{
    HomogeneousPolynomial p(3, 2);
    EXPECT_THROW(p.add_term(Monomial({1, 0, 0}), 1), std::invalid_argument);
    EXPECT_THROW(p.add_term(Monomial({1, 1}), 1), DimensionMismatch);
}

TEST(HomogeneousPolynomial, CancellationDropsTerms)
{
    auto p = poly("x1*x2 + x3^2", 3) - poly("x3^2", 3);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(HomogeneousPolynomial, GradedLexOrder)
{
    const auto p = poly("x2^2 + x1*x2 + x1^2", 2);
    std::vector<Monomial> order;
    for (const auto& [m, c] : p.terms()) order.push_back(m);
    ASSERT_EQ(order.size(), 3u);
    EXPECT_EQ(order[0], Monomial({2, 0}));
    EXPECT_EQ(order[1], Monomial({1, 1}));
    EXPECT_EQ(order[2], Monomial({0, 2}));
}

TEST(HomogeneousPolynomial, AdditionChecksDimension)
{
    EXPECT_THROW(poly("x1", 2) + poly("x1", 3), DimensionMismatch);
}

TEST(SphereMonomialIntegral, Examples)
{
    EXPECT_EQ(sphere_monomial_integral(Monomial({0, 0, 0})), Rational(1));
    EXPECT_EQ(sphere_monomial_integral(Monomial({2, 0, 0})), Rational(1, 3));
    EXPECT_EQ(sphere_monomial_integral(Monomial({1, 1, 0})), Rational(0));
    EXPECT_EQ(sphere_monomial_integral(Monomial({2, 2, 0})), Rational(1, 15));
    EXPECT_EQ(sphere_monomial_integral(Monomial({4, 0, 0, 0})), Rational(1, 8));
}

TEST(SphereMonomialIntegral, SumOverSlotsRecoversLowerDegree)
{
    // sum_i int xi^{e + 2 e_i} = int xi^e because sum xi_i^2 = 1
    CaseRng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.integer(1, 8);
        Monomial e = Monomial::zero(d);
        for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = 2u * static_cast<unsigned>(rng.integer(0, 3));
        Rational sum = 0;
        for (int i = 0; i < d; ++i) {
            Monomial f = e;
            f[static_cast<std::size_t>(i)] += 2;
            sum += sphere_monomial_integral(f);
        }
        EXPECT_EQ(sum, sphere_monomial_integral(e));
    }
}

TEST(SphereMonomialIntegral, MonteCarloCrossCheck)
{
    CaseRng rng(15);
    const int samples = 400000;
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) {
        const auto xi = rng.sphere_point(3);
        acc += xi[0] * xi[0] * xi[1] * xi[1];
    }
    EXPECT_NEAR(acc / samples, 1.0 / 15.0, 1e-3);
}

TEST(SphereInnerProduct, Examples)
{
    const auto one = HomogeneousPolynomial::constant(3, 1);
    EXPECT_EQ(sphere_inner_product(one, one), Rational(1));
    for (int d = 2; d <= 6; ++d) {
        EXPECT_EQ(sphere_inner_product(HomogeneousPolynomial::variable(d, 0), HomogeneousPolynomial::variable(d, 1)), Rational(0));
    }
    EXPECT_EQ(sphere_inner_product(poly("x1^2", 3), poly("x2^2", 3)), Rational(1, 15));
}

TEST(SphereInnerProduct, DifferentDegreesAllowed)
{
    EXPECT_EQ(sphere_inner_product(poly("x1^2", 3), HomogeneousPolynomial::constant(3, 1)), Rational(1, 3));
    EXPECT_THROW(sphere_inner_product(poly("x1", 3), poly("x1", 4)), DimensionMismatch);
}

TEST(SphereInnerProduct, SymmetricAndPositive)
{
    CaseRng rng(16);
    for (int trial = 0; trial < 80; ++trial) {
        const int d = rng.integer(2, 6);
        const auto p = random_polynomial(rng, d, rng.integer(0, 6), 5);
        const auto q = random_polynomial(rng, d, rng.integer(0, 6), 5);
        EXPECT_EQ(sphere_inner_product(p, q), sphere_inner_product(q, p));
        EXPECT_GT(sphere_inner_product(p, p), 0);
    }
}

TEST(SphereInnerProduct, MixedParityIsZero)
{
    CaseRng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = rng.integer(2, 6);
        const int l = rng.integer(0, 5);
        const auto p = random_polynomial(rng, d, l, 5);
        const auto q = random_polynomial(rng, d, l + 2 * rng.integer(0, 1) + 1, 5);
        EXPECT_EQ(sphere_inner_product(p, q), Rational(0));
    }
}

TEST(SphereInnerProduct, BruteForceAgreement)
{
    // bilinear expansion term by term, no grouping
    CaseRng rng(18);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = rng.integer(2, 5);
        const auto p = random_polynomial(rng, d, rng.integer(0, 5), 6);
        const auto q = random_polynomial(rng, d, rng.integer(0, 5), 6);
        Rational expected = 0;
        for (const auto& [ma, ca] : p.terms()) {
            for (const auto& [mb, cb] : q.terms()) {
                Monomial m = ma;
                for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] += mb[static_cast<std::size_t>(i)];
                expected += ca * cb * sphere_monomial_integral(m);
            }
        }
        EXPECT_EQ(sphere_inner_product(p, q), expected);
    }
}

TEST(PermuteVariables, MapsIndices)
{
    const std::vector<int> perm{2, 0, 1};
    EXPECT_EQ(permute_variables(poly("x1^2*x2", 3), perm), poly("x3^2*x1", 3));
}

TEST(UnitVector, Validation)
{
    EXPECT_THROW(UnitVector(std::vector<double>{1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(UnitVector::normalized(std::vector<double>{0.0, 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(UnitVector::normalized(std::vector<double>{3.0, 4.0}));
    EXPECT_DOUBLE_EQ(UnitVector::axis(3, 1).dot(UnitVector::axis(3, 1)), 1.0);
}
