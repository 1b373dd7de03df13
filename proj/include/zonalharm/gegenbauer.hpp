#pragma once

#include "harmonic.hpp"
#include "polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zh {

/// C^alpha_l(t) with exact coefficients in the monomial basis of t; coefficients()[n] multiplies t^n.
class GegenbauerPoly {
public:
    GegenbauerPoly(Alpha alpha, int degree, std::vector<Rational> coefficients)
        : alpha_(std::move(alpha)), degree_(degree), coefficients_(std::move(coefficients))
    {
    }

    const Alpha& alpha() const { return alpha_; }
    int degree() const { return degree_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational operator()(const Rational& t) const
    {
        Rational sum = 0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) sum = sum * t + *it;
        return sum;
    }

private:
    Alpha alpha_;
    int degree_;
    std::vector<Rational> coefficients_;
};

/// Explicit sum C^alpha_l(t) = sum_j (-1)^j Gamma(alpha+l-j) / (Gamma(alpha) j! (l-2j)!) (2t)^{l-2j}.
inline GegenbauerPoly gegenbauer(const Alpha& alpha, int l)
{
    if (l < 0) throw std::invalid_argument("gegenbauer: negative degree");
    std::vector<Rational> coeffs(static_cast<std::size_t>(l + 1), Rational(0));
    for (int j = 0; j <= l / 2; ++j) {
        const auto n = static_cast<unsigned>(l - 2 * j);
        Rational c = rising(alpha.value(), static_cast<unsigned>(l - j));
        c *= pow2(n);
        c /= factorial(static_cast<unsigned>(j)) * factorial(n);
        coeffs[n] = j % 2 == 0 ? c : Rational(-c);
    }
    return GegenbauerPoly(alpha, l, std::move(coeffs));
}

/// C^alpha_l(1) = Gamma(2alpha+l) / (Gamma(2alpha) l!) = (2alpha)_l / l!.
inline Rational gegenbauer_at_one(const Alpha& alpha, int l)
{
    if (l < 0) throw std::invalid_argument("gegenbauer_at_one: negative degree");
    return rising(2 * alpha.value(), static_cast<unsigned>(l)) / factorial(static_cast<unsigned>(l));
}

/// Floating value by the upward three-term recurrence
/// (n+1) C_{n+1} = 2(n+alpha) t C_n - (n+2alpha-1) C_{n-1}.
inline double gegenbauer_value(double alpha, int l, double t)
{
    if (l < 0) throw std::invalid_argument("gegenbauer_value: negative degree");
    if (l == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * alpha * t;
    for (int n = 1; n < l; ++n) {
        const double next = (2.0 * (n + alpha) * t * cur - (n + 2.0 * alpha - 1.0) * prev) / (n + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// C^alpha_0(t), ..., C^alpha_M(t) in one pass.
inline std::vector<double> gegenbauer_values(double alpha, int max_degree, double t)
{
    std::vector<double> out(static_cast<std::size_t>(max_degree + 1));
    out[0] = 1.0;
    if (max_degree >= 1) out[1] = 2.0 * alpha * t;
    for (int n = 1; n < max_degree; ++n) {
        out[static_cast<std::size_t>(n + 1)] =
            (2.0 * (n + alpha) * t * out[static_cast<std::size_t>(n)] - (n + 2.0 * alpha - 1.0) * out[static_cast<std::size_t>(n - 1)]) /
            (n + 1);
    }
    return out;
}

/// Reproducing kernel Z^l_eta(xi) = C^alpha_l((xi|eta)) / C^alpha_l(1) of H^l.
class ZonalKernel {
public:
    ZonalKernel(Alpha alpha, int degree, UnitVector pole) : alpha_(std::move(alpha)), degree_(degree), pole_(std::move(pole))
    {
        if (degree_ < 0) throw std::invalid_argument("zonal kernel degree must be nonnegative");
        require_same_dimension(static_cast<std::size_t>(alpha_.dimension()), static_cast<std::size_t>(pole_.dimension()),
                               "zonal kernel pole");
    }

    const Alpha& alpha() const { return alpha_; }
    int degree() const { return degree_; }
    const UnitVector& pole() const { return pole_; }

private:
    Alpha alpha_;
    int degree_;
    UnitVector pole_;
};

inline double zonal_kernel_eval(const ZonalKernel& kernel, const UnitVector& xi)
{
    require_same_dimension(static_cast<std::size_t>(xi.dimension()), static_cast<std::size_t>(kernel.pole().dimension()),
                           "zonal_kernel_eval");
    const double t = kernel.pole().dot(xi);
    return gegenbauer_value(kernel.alpha().to_double(), kernel.degree(), t) /
           to_double(gegenbauer_at_one(kernel.alpha(), kernel.degree()));
}

/// Homogeneous extension |x|^l C^alpha_l(x_axis / |x|) as an exact polynomial in d variables.
/// Only parity-l powers of t occur, so every |x| power is even.
inline HomogeneousPolynomial gegenbauer_axis_polynomial(const Alpha& alpha, int l, int axis)
{
    const int d = alpha.dimension();
    const GegenbauerPoly c = gegenbauer(alpha, l);
    HomogeneousPolynomial out(d, l);
    for (int n = l; n >= 0; n -= 2) {
        const Rational& coeff = c.coefficients()[static_cast<std::size_t>(n)];
        if (coeff == 0) continue;
        Monomial m = Monomial::zero(d);
        m[static_cast<std::size_t>(axis)] = static_cast<unsigned>(n);
        out += mul_r2_power(HomogeneousPolynomial::monomial(d, m, coeff), (l - n) / 2);
    }
    return out;
}

/// Weights w_k with (x|eta)^l = |x|^l sum_k w_k C^alpha_{l-2k}((xi|eta)),
/// w_k = 2^{-l} Gamma(alpha) l! (alpha+l-2k) / (k! Gamma(alpha+l+1-k)).
inline std::vector<std::pair<int, Rational>> expand_power(const Alpha& alpha, int l)
{
    if (l < 0) throw std::invalid_argument("expand_power: negative degree");
    std::vector<std::pair<int, Rational>> out;
    for (int k = 0; k <= l / 2; ++k) {
        Rational w = factorial(static_cast<unsigned>(l)) * (alpha.value() + (l - 2 * k));
        w /= pow2(static_cast<unsigned>(l)) * factorial(static_cast<unsigned>(k));
        w /= rising(alpha.value(), static_cast<unsigned>(l + 1 - k));
        out.emplace_back(k, w);
    }
    return out;
}

/// |sum_{m<=M} r^m C^alpha_m(t) - (1 - 2rt + r^2)^{-alpha}|.
inline double generating_function_check(const Alpha& alpha, double r, double t, int max_degree)
{
    if (!(std::abs(r) < 1.0)) throw std::invalid_argument("generating_function_check: need |r| < 1");
    if (!(std::abs(t) <= 1.0)) throw std::invalid_argument("generating_function_check: need |t| <= 1");
    const double a = alpha.to_double();
    const auto values = gegenbauer_values(a, max_degree, t);
    long double sum = 0.0L;
    long double rm = 1.0L;
    for (int m = 0; m <= max_degree; ++m) {
        sum += rm * values[static_cast<std::size_t>(m)];
        rm *= r;
    }
    const long double closed = std::pow(static_cast<long double>(1.0 - 2.0 * r * t + r * r), static_cast<long double>(-a));
    return static_cast<double>(std::abs(sum - closed));
}

} // namespace zh
