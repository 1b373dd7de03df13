#include <zonalharm/bessel.hpp>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace zh;

namespace {

const double pi = std::numbers::pi;

double boost_j(double nu, double t) { return boost::math::cyl_bessel_j(nu, t); }

} // namespace

TEST(BesselOrder, Validation)
{
    EXPECT_THROW(BesselOrder(-1, 1), std::invalid_argument);
    EXPECT_THROW(BesselOrder(-3, 2), std::invalid_argument);
    EXPECT_NO_THROW(BesselOrder(-1, 2));
}

TEST(GammaValue, ExactPaths)
{
    EXPECT_DOUBLE_EQ(gamma_value(Rational(5)), 24.0);
    EXPECT_NEAR(gamma_value(Rational(1, 2)), std::sqrt(pi), 1e-15);
    EXPECT_NEAR(gamma_value(Rational(7, 2)), 15.0 / 8.0 * std::sqrt(pi), 1e-14);
    EXPECT_NEAR(gamma_value(Rational(1, 3)), std::tgamma(1.0 / 3.0), 1e-14);
    EXPECT_THROW(gamma_value(Rational(0)), std::domain_error);
}

TEST(BesselJ, Examples)
{
    EXPECT_EQ(bessel_j(BesselOrder(0, 1), 0.0), 1.0);
    EXPECT_EQ(bessel_j(BesselOrder(3, 2), 0.0), 0.0);
    for (double t : {1.0, 2.0, 5.0}) {
        EXPECT_NEAR(bessel_j(BesselOrder(-1, 2), t), std::sqrt(2.0 / (pi * t)) * std::cos(t), 1e-13) << t;
    }
    EXPECT_NEAR(bessel_j(BesselOrder(1, 2), pi), 0.0, 1e-13);
    EXPECT_NEAR(bessel_j(BesselOrder(-1, 2), 1.0), 0.4310988680183761, 1e-15);
}

TEST(BesselJ, DomainErrors)
{
    EXPECT_THROW(bessel_j(BesselOrder(0, 1), -1.0), std::domain_error);
    EXPECT_THROW(bessel_j(BesselOrder(0, 1), 30.5), std::domain_error);
    EXPECT_NO_THROW(bessel_j(BesselOrder(0, 1), 30.0));
}

TEST(BesselJ, AgreesWithIndependentImplementation)
{
    for (int twice_nu = -1; twice_nu <= 24; ++twice_nu) {
        const BesselOrder nu(twice_nu, 2);
        for (double t : {0.01, 0.3, 1.0, 2.5, 7.0, 12.0, 19.0, 25.0, 30.0}) {
            const double expected = boost_j(twice_nu / 2.0, t);
            EXPECT_NEAR(bessel_j(nu, t), expected, 1e-13 * std::max(1.0, std::abs(expected))) << twice_nu << "/2 at " << t;
        }
    }
}

TEST(SphericalJ, Examples)
{
    for (int twice_nu = -1; twice_nu <= 20; ++twice_nu) EXPECT_EQ(spherical_j(BesselOrder(twice_nu, 2), 0.0), 1.0);
    EXPECT_NEAR(spherical_j(BesselOrder(1, 2), 1.0), std::sin(1.0), 1e-15);
    const double t = 2.0;
    EXPECT_NEAR(spherical_j(BesselOrder(3, 2), t), 3.0 * (std::sin(t) - t * std::cos(t)) / (t * t * t), 1e-12);
}

TEST(SphericalJ, SmallArgumentBehaviour)
{
    // |j_nu(t) - 1| ~ C t^2 with C = 1 / (4 (nu + 1))
    for (int twice_nu = -1; twice_nu <= 12; ++twice_nu) {
        const BesselOrder nu(twice_nu, 2);
        const double expected = 1.0 / (4.0 * (nu.to_double() + 1.0));
        // least-squares fit of C over t in (0, 0.1]
        double num = 0.0;
        double den = 0.0;
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.005 * i;
            num += std::abs(spherical_j(nu, t) - 1.0) * t * t;
            den += t * t * t * t;
        }
        const double c = num / den;
        EXPECT_NEAR(c, expected, 0.1 * expected) << "nu=" << twice_nu << "/2";
    }
}

TEST(BesselJ, ClassicalRecurrence)
{
    for (int twice_nu = 1; twice_nu <= 20; ++twice_nu) {
        const Rational nu = make_rational(twice_nu, 2);
        for (int i = 1; i <= 40; ++i) {
            const double t = 0.5 * i;
            const double residual =
                bessel_j(nu - 1, t) + bessel_j(nu + 1, t) - 2.0 * to_double(nu) / t * bessel_j(nu, t);
            EXPECT_LT(std::abs(residual), 1e-12) << "nu=" << twice_nu << "/2 t=" << t;
        }
    }
}

TEST(BesselJ, DerivativeRelation)
{
    // d/dt (t^{-nu} J_nu) = -t^{-nu} J_{nu+1}
    const double h = 1e-5;
    for (int twice_nu = -1; twice_nu <= 10; ++twice_nu) {
        const BesselOrder nu(twice_nu, 2);
        const BesselOrder next(twice_nu + 2, 2);
        const double v = nu.to_double();
        auto g = [&](double t) { return std::pow(t, -v) * bessel_j(nu, t); };
        for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double lhs = (g(t + h) - g(t - h)) / (2.0 * h) / t;
            const double rhs = -std::pow(t, -v - 1.0) * bessel_j(next, t);
            EXPECT_NEAR(lhs, rhs, 1e-7) << twice_nu << "/2 " << t;
        }
    }
}

TEST(Multistep, CoefficientAtKEqualsSIsOne)
{
    for (int twice_alpha = 1; twice_alpha <= 12; ++twice_alpha) {
        const Alpha alpha(make_rational(twice_alpha, 2));
        for (int l = 2; l <= 14; ++l) {
            for (int s = 1; s <= l / 2; ++s) EXPECT_EQ(multistep_coefficient(alpha, l, s, s), Rational(1));
        }
    }
}

TEST(Multistep, Examples)
{
    const Alpha half(Rational(1, 2));
    EXPECT_LT(multistep_residual(half, 2, 1, 1.0), 1e-13);
    EXPECT_LT(multistep_residual(half, 2, 1, 0.0), 1e-15);
    EXPECT_LT(multistep_residual(Alpha(Rational(2)), 10, 4, 0.0), 1e-15);
    EXPECT_THROW(multistep_residual(half, 2, 2, 1.0), std::invalid_argument);
    EXPECT_THROW(multistep_residual(half, 2, 0, 1.0), std::invalid_argument);
    EXPECT_THROW(multistep_residual_J(half, 2, 1, 0.0), std::domain_error);
}

TEST(Multistep, SingleStepIsClassicalRecurrence)
{
    // s = 1: (2/r) J_{a-1} = c0 J_a + c1 J_{a-2} with a = alpha + l
    const Alpha half(Rational(1, 2));
    const double r = 1.0;
    const double a = 2.5;
    const double classical = std::abs(boost_j(a - 2, r) + boost_j(a, r) - 2.0 * (a - 1) / r * boost_j(a - 1, r));
    EXPECT_LT(classical, 1e-14);
    EXPECT_LT(multistep_residual_J(half, 2, 1, r), 1e-13);
    // the s = 1 coefficients reproduce the classical ones after scaling by (a-1)
    EXPECT_EQ(multistep_coefficient_J(half, 2, 1, 0) * (Rational(5, 2) - 1), Rational(1));
    EXPECT_EQ(multistep_coefficient_J(half, 2, 1, 1) * (Rational(5, 2) - 1), Rational(1));
}

TEST(Multistep, GridSweep)
{
    double worst = 0.0;
    double worst_j = 0.0;
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        const Alpha alpha(a);
        for (int l = 2; l <= 10; ++l) {
            for (int s = 1; s <= l / 2; ++s) {
                for (double r : {0.5, 1.0, 2.0, 5.0, 10.0}) {
                    worst = std::max(worst, multistep_residual(alpha, l, s, r));
                    worst_j = std::max(worst_j, multistep_residual_J(alpha, l, s, r));
                }
            }
        }
    }
    EXPECT_LT(worst, 1e-11);
    EXPECT_LT(worst_j, 1e-11);
}

TEST(Multistep, FormsAgreeUpToNormalization)
{
    // the j form scaled by (r/2)^{alpha+l-2s} / (s! Gamma(alpha+l+1-s)) equals the J form term by term
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        const Alpha alpha(a);
        for (int l = 2; l <= 8; ++l) {
            for (int s = 1; s <= l / 2; ++s) {
                const Rational nu_top = a + l;
                for (int k = 0; k <= s; ++k) {
                    // c_k (r/2)^{2(s-k)} j_{a-2k} = c_k Gamma(a-2k+1) (r/2)^{2s-a} J_{a-2k}
                    // Gamma(a-2k+1) / (s! Gamma(a+1-s)) = 1 / (s! (a-2k+1)_{2k-s}) when 2k >= s, else (a+1-s)_{s-2k} / s!
                    Rational ratio;
                    if (2 * k >= s) {
                        ratio = 1 / (Rational(factorial(static_cast<unsigned>(s))) *
                                     rising(nu_top - 2 * k + 1, static_cast<unsigned>(2 * k - s)));
                    } else {
                        ratio = rising(nu_top + 1 - s, static_cast<unsigned>(s - 2 * k)) / Rational(factorial(static_cast<unsigned>(s)));
                    }
                    EXPECT_EQ(multistep_coefficient(alpha, l, s, k) * ratio, multistep_coefficient_J(alpha, l, s, k))
                        << "alpha=" << to_string(a) << " l=" << l << " s=" << s << " k=" << k;
                }
                for (double r : {0.5, 2.0, 6.0}) {
                    const double scale = std::pow(r / 2.0, to_double(nu_top) - 2 * s) /
                                         (to_double(Rational(factorial(static_cast<unsigned>(s)))) * gamma_value(nu_top + 1 - s));
                    EXPECT_NEAR(multistep_residual(alpha, l, s, r) * scale, multistep_residual_J(alpha, l, s, r), 1e-13);
                }
            }
        }
    }
}

TEST(FiniteExpansion, IntegerOrder)
{
    EXPECT_EQ(finite_expansion_integer_residual(0, 1.7), 0.0);
    EXPECT_LT(finite_expansion_integer_residual(1, 1.0), 1e-14);
    const double t = 1.0;
    EXPECT_NEAR(boost_j(0, t) + boost_j(2, t), 2.0 / t * boost_j(1, t), 1e-15);
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) {
        for (double s : {0.5, 1.0, 2.0, 5.0}) worst = std::max(worst, finite_expansion_integer_residual(n, s));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(FiniteExpansion, HalfOddOrder)
{
    EXPECT_LT(finite_expansion_halfodd_residual(0, 1.0), 1e-14);
    EXPECT_NEAR(half_odd_closed_form(0, 1.0), std::sqrt(2.0 / pi) * std::sin(1.0), 1e-15);
    const double t = 2.0;
    EXPECT_NEAR(half_odd_closed_form(1, t), std::sqrt(2.0 / (pi * t)) * (std::sin(t) / t - std::cos(t)), 1e-15);
    EXPECT_LT(finite_expansion_halfodd_residual(1, 2.0), 1e-13);
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n) {
        for (double s : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            worst = std::max(worst, finite_expansion_halfodd_residual(n, s));
            EXPECT_NEAR(half_odd_closed_form(n, s), boost_j(n + 0.5, s), 1e-11);
        }
    }
    EXPECT_LT(worst, 1e-11);
}
