#include <zonalharm/oracles.hpp>
#include <zonalharm/random.hpp>
#include <zonalharm/zonal.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace zh;

namespace {

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

} // namespace

TEST(ZonalProfile, Validation)
{
    EXPECT_THROW(ZonalProfile({}, {0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(ZonalProfile({Complex(1.0)}, {-1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(ZonalProfile({Complex(std::numeric_limits<double>::infinity())}, {0.0, 0.0}), std::invalid_argument);
    EXPECT_TRUE(ZonalProfile::monomial(3).is_exact());
    EXPECT_FALSE(ZonalProfile::plane_wave(2.0).is_exact());
}

TEST(ZonalProfile, FromTaylorTailEstimate)
{
    std::vector<Complex> geometric;
    for (int n = 0; n < 40; ++n) geometric.emplace_back(std::pow(0.5, n));
    const auto p = ZonalProfile::from_taylor(geometric);
    EXPECT_GT(p.tail_bound(0), 0.0);
    EXPECT_LT(p.tail_bound(0), 1e-11);
    EXPECT_NEAR(p(0.5).real(), 1.0 / (1.0 - 0.25), 1e-11);
    const auto poly = ZonalProfile::from_taylor({Complex(1.0), Complex(0.0), Complex(2.0)});
    EXPECT_EQ(poly.tail_bound(1), 0.0);
}

TEST(Expand, ConstantProfile)
{
    for (int d = 3; d <= 6; ++d) {
        const Alpha a = Alpha::from_dimension(d);
        const Complex c(2.5, -1.0);
        const auto exp = expand(ZonalProfile::constant(c), a, 6);
        EXPECT_LT(std::abs(exp.coefficients[0] - c / gamma_value(a.value() + 1)), 1e-15);
        for (int m = 1; m <= 6; ++m) EXPECT_EQ(exp.coefficients[static_cast<std::size_t>(m)], Complex(0.0));
        EXPECT_EQ(exp.tail_estimate, 0.0);
        CaseRng rng(51);
        const UnitVector pole = UnitVector::axis(d, d - 1);
        for (int i = 0; i < 5; ++i) {
            const auto value = evaluate_expansion(exp, pole, UnitVector(rng.sphere_point(d)));
            EXPECT_LT(std::abs(value.value - c), 1e-14);
        }
    }
}

TEST(Expand, LinearProfile)
{
    for (int d = 3; d <= 6; ++d) {
        const Alpha a = Alpha::from_dimension(d);
        const auto exp = expand(ZonalProfile::monomial(1), a, 5);
        EXPECT_NEAR(exp.coefficients[1].real(), 1.0 / (2.0 * gamma_value(a.value() + 2)), 1e-15);
        for (int m : {0, 2, 3, 4, 5}) EXPECT_EQ(exp.coefficients[static_cast<std::size_t>(m)], Complex(0.0));
        // the l = 1 elementary zonal weight: (xi|eta) = C_1 / (2 alpha)
        const double c1_weight = to_double(expand_power(a, 1)[0].second);
        EXPECT_NEAR(exp.term_coefficient(1).real() / to_double(gegenbauer_at_one(a, 1)), c1_weight, 1e-15);
        CaseRng rng(52);
        const UnitVector pole(rng.sphere_point(d));
        const UnitVector xi(rng.sphere_point(d));
        EXPECT_NEAR(evaluate_expansion(exp, pole, xi).value.real(), pole.dot(xi), 1e-14);
    }
}

TEST(Expand, PolynomialProfilesTerminate)
{
    for (int d = 3; d <= 5; ++d) {
        const Alpha a = Alpha::from_dimension(d);
        for (int l = 0; l <= 8; ++l) {
            const auto exp = expand(ZonalProfile::monomial(l), a, l + 6);
            for (int m = 0; m <= l + 6; ++m) {
                if (m > l || (l - m) % 2 != 0) EXPECT_EQ(exp.coefficients[static_cast<std::size_t>(m)], Complex(0.0));
                else EXPECT_NE(exp.coefficients[static_cast<std::size_t>(m)], Complex(0.0));
            }
            EXPECT_EQ(exp.tail_estimate, 0.0);
        }
    }
}

TEST(Expand, MonomialProfileMatchesElementaryZonalWeights)
{
    // t^l = sum_k w_k C_{l-2k}(t)
    for (int d = 3; d <= 6; ++d) {
        const Alpha a = Alpha::from_dimension(d);
        for (int l = 0; l <= 10; ++l) {
            const auto exp = expand(ZonalProfile::monomial(l), a, l);
            for (const auto& [k, w] : expand_power(a, l)) {
                const int m = l - 2 * k;
                const double from_expand = exp.term_coefficient(m).real() / to_double(gegenbauer_at_one(a, m));
                EXPECT_NEAR(from_expand, to_double(w), 1e-14 * std::max(1.0, to_double(w)));
            }
        }
    }
}

TEST(Expand, PlaneWaveMatchesClosedForm)
{
    for (int d : {3, 4, 5}) {
        const Alpha a = Alpha::from_dimension(d);
        for (double r : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            const auto exp = expand(ZonalProfile::plane_wave(r), a, 20);
            const auto closed = plane_wave_coefficients(a, r, 20);
            for (int m = 0; m <= 20; ++m) {
                const Complex lhs = exp.term_coefficient(m);
                const Complex rhs = closed[static_cast<std::size_t>(m)];
                EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs))) << "d=" << d << " r=" << r << " m=" << m;
            }
        }
    }
}

TEST(Expand, MatchesGegenbauerIntegral)
{
    for (int d : {3, 4, 5}) {
        const Alpha a = Alpha::from_dimension(d);
        const double ad = a.to_double();
        const std::vector<ZonalProfile> profiles{ZonalProfile::plane_wave(2.0), ZonalProfile::gegenbauer_generating(ad, 0.4),
                                                 ZonalProfile::monomial(4), ZonalProfile::monomial(5)};
        for (const auto& profile : profiles) {
            const auto exp = expand(profile, a, 10);
            for (int m = 0; m <= 10; ++m) {
                // the integral form yields the coefficient of Z^m
                const Complex mine = exp.term_coefficient(m);
                const Complex ref = oracle::gegenbauer_integral_coefficient(profile, ad, m);
                if (std::abs(ref) < 1e-13) {
                    EXPECT_LT(std::abs(mine), 1e-12);
                } else {
                    EXPECT_LT(rel_err(mine, ref), 1e-8) << "d=" << d << " m=" << m;
                }
            }
        }
    }
}

TEST(Expand, GeneratingProfileGivesPowers)
{
    // (1 - 2rt + r^2)^{-alpha} = sum r^m C_m(t), so the C_m coefficient is r^m
    for (int d : {3, 4, 6}) {
        const Alpha a = Alpha::from_dimension(d);
        const double r = 0.4;
        const auto exp = expand(ZonalProfile::gegenbauer_generating(a.to_double(), r), a, 25);
        for (int m = 0; m <= 25; ++m) {
            const double got = exp.term_coefficient(m).real() / to_double(gegenbauer_at_one(a, m));
            EXPECT_NEAR(got, std::pow(r, m), 1e-12 * std::pow(r, m)) << d << " " << m;
        }
    }
}

TEST(Expand, Linearity)
{
    const Alpha a = Alpha::from_dimension(4);
    const auto phi = ZonalProfile::plane_wave(1.5);
    const auto psi = ZonalProfile::gegenbauer_generating(1.0, 0.3);
    const Complex ca(0.7, -0.2);
    const Complex cb(-1.25, 0.5);
    const auto combined = expand(ZonalProfile::linear_combination(ca, phi, cb, psi), a, 15);
    const auto ephi = expand(phi, a, 15);
    const auto epsi = expand(psi, a, 15);
    for (int m = 0; m <= 15; ++m) {
        const auto um = static_cast<std::size_t>(m);
        const Complex expected = ca * ephi.coefficients[um] + cb * epsi.coefficients[um];
        EXPECT_LE(std::abs(combined.coefficients[um] - expected), 1e-14 * std::max(1.0, std::abs(expected)));
    }
}

TEST(Expand, InsufficientData)
{
    // ten Taylor terms with slow decay cannot support many coefficients
    std::vector<Complex> taylor;
    for (int n = 0; n < 10; ++n) taylor.emplace_back(std::pow(0.9, n));
    const auto profile = ZonalProfile::from_taylor(taylor);
    try {
        expand(profile, Alpha::from_dimension(3), 8);
        FAIL() << "expected InsufficientTaylorData";
    } catch (const InsufficientTaylorData& e) {
        EXPECT_LT(e.achievable(), 8);
    }
    EXPECT_THROW(expand(profile, Alpha::from_dimension(3), -1), std::invalid_argument);
}

TEST(EvaluateExpansion, PlaneWaveAtPoleAndEquator)
{
    const double r = 2.0;
    for (int d : {3, 4, 5}) {
        const Alpha a = Alpha::from_dimension(d);
        const auto exp = expand(ZonalProfile::plane_wave(r), a, 40);
        const UnitVector eta = UnitVector::axis(d, d - 1);
        const auto at_pole = evaluate_expansion(exp, eta, eta);
        EXPECT_LT(std::abs(at_pole.value - std::exp(Complex(0.0, r))), 1e-10);
        EXPECT_LT(at_pole.tail_bound, 1e-10);
        const auto at_equator = evaluate_expansion(exp, eta, UnitVector::axis(d, 0));
        EXPECT_LT(std::abs(at_equator.value - Complex(1.0)), 1e-10);
    }
    const auto exp3 = expand(ZonalProfile::plane_wave(r), Alpha::from_dimension(3), 5);
    EXPECT_THROW(evaluate_expansion(exp3, UnitVector::axis(4, 0), UnitVector::axis(4, 0)), DimensionMismatch);
}

TEST(PlaneWave, Coefficients)
{
    const Alpha a = Alpha::from_dimension(3);
    for (double r : {0.3, 1.0, 4.0}) EXPECT_NEAR(plane_wave_coefficients(a, r, 0)[0].real(), std::sin(r) / r, 1e-15);
    const auto at_zero = plane_wave_coefficients(Alpha::from_dimension(5), 0.0, 6);
    EXPECT_EQ(at_zero[0], Complex(1.0));
    for (int m = 1; m <= 6; ++m) EXPECT_EQ(at_zero[static_cast<std::size_t>(m)], Complex(0.0));
}

TEST(PlaneWave, PartialSumsConverge)
{
    CaseRng rng(53);
    for (int d : {3, 4}) {
        const Alpha a = Alpha::from_dimension(d);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const UnitVector xi(rng.sphere_point(d));
            const UnitVector eta(rng.sphere_point(d));
            const double r = 5.0;
            const Complex sum = plane_wave_partial_sum(a, r, xi, eta, 50);
            worst = std::max(worst, std::abs(sum - std::exp(Complex(0.0, r * xi.dot(eta)))));
        }
        EXPECT_LT(worst, 1e-10);
    }
}
