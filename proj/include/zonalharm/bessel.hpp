#pragma once

#include "harmonic.hpp"
#include "rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zh {

/// Order nu > -1 of J_nu, kept exact.
class BesselOrder {
public:
    explicit BesselOrder(const Rational& nu) : nu_(nu)
    {
        if (!(nu_ > -1)) throw std::invalid_argument("Bessel order must exceed -1, got " + to_string(nu_));
    }
    BesselOrder(long num, long den) : BesselOrder(make_rational(num, den)) {}

    const Rational& value() const { return nu_; }
    double to_double() const { return zh::to_double(nu_); }

private:
    Rational nu_;
};

/// Largest argument accepted by the power-series evaluator.
inline constexpr double bessel_series_cap = 30.0;

/// Gamma(x) for x > 0. Integers and half-odd integers go through an exact product
/// (down to Gamma(1) or Gamma(1/2) = sqrt(pi)); anything else falls back to tgamma.
inline double gamma_value(const Rational& x)
{
    if (!(x > 0)) throw std::domain_error("gamma_value: argument " + to_string(x) + " is not positive");
    if (is_integer(x)) {
        return to_double(Rational(factorial(static_cast<unsigned>(x.get_num().get_ui() - 1))));
    }
    if (x.get_den() == 2) {
        const Rational half(1, 2);
        const auto steps = static_cast<unsigned>(Rational(x - half).get_num().get_ui());
        return to_double(rising(half, steps)) * std::sqrt(std::numbers::pi);
    }
    return std::tgamma(to_double(x));
}

namespace detail {

using bessel_wide = boost::multiprecision::cpp_bin_float_50;

/// sum_k (-q)^k / (k! (nu+1)_k) with q = t^2/4, evaluated in Real. `abs_sum` collects sum |term|.
template <typename Real>
Real spherical_series(const Real& nu, const Real& q, Real& abs_sum, const Real& rel_stop)
{
    using std::abs;
    Real term = 1;
    Real sum = 1;
    abs_sum = 1;
    for (int k = 1; k < 10000; ++k) {
        term *= -q / (Real(k) * (nu + k));
        sum += term;
        abs_sum += abs(term);
        if (Real(k) * (nu + k) > q && (abs(term) <= rel_stop * abs(sum) || abs(term) < Real(1e-300))) break;
    }
    return sum;
}

} // namespace detail

/// j_nu(t) = Gamma(nu+1) (t/2)^{-nu} J_nu(t) = sum_k (-1)^k (t/2)^{2k} / (k! (nu+1)_k); j_nu(0) = 1.
inline double spherical_j(const BesselOrder& order, double t)
{
    if (!(t >= 0.0)) throw std::domain_error("spherical_j: argument must be nonnegative");
    if (t > bessel_series_cap) {
        throw std::domain_error("spherical_j: argument " + std::to_string(t) + " exceeds the power-series cap " +
                                std::to_string(bessel_series_cap) + "; an asymptotic evaluator is required");
    }
    if (t == 0.0) return 1.0;

    using std::abs;
    const long double nu = static_cast<long double>(order.to_double());
    const long double q = static_cast<long double>(t) * t / 4.0L;
    long double abs_sum = 0;
    const long double sum = detail::spherical_series<long double>(nu, q, abs_sum, 1e-17L);
    // Rounding in the alternating terms is bounded by abs_sum * eps; widen when that beats 1e-17.
    const long double rounding = abs_sum * std::numeric_limits<long double>::epsilon() * 4;
    if (rounding <= 1e-17L * std::abs(sum)) return static_cast<double>(sum);

    using W = detail::bessel_wide;
    const W wnu = W(order.value().get_num().get_str()) / W(order.value().get_den().get_str());
    const W wt = W(t);
    W wabs = 0;
    const W wsum = detail::spherical_series<W>(wnu, wt * wt / 4, wabs, W(1e-30));
    return static_cast<double>(wsum);
}

/// J_nu(t) by the defining power series, t in [0, 30].
inline double bessel_j(const BesselOrder& order, double t)
{
    if (!(t >= 0.0)) throw std::domain_error("bessel_j: argument must be nonnegative");
    if (t == 0.0) {
        if (order.value() == 0) return 1.0;
        return order.value() > 0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double j = spherical_j(order, t);
    const double nu = order.to_double();
    return std::pow(t / 2.0, nu) * j / gamma_value(order.value() + 1);
}

inline double spherical_j(const Rational& nu, double t) { return spherical_j(BesselOrder(nu), t); }
inline double bessel_j(const Rational& nu, double t) { return bessel_j(BesselOrder(nu), t); }

namespace detail {

inline void check_multistep(const Alpha& alpha, int l, int s)
{
    if (s < 1 || s > l / 2) {
        throw std::invalid_argument("multistep recurrence needs 1 <= s <= floor(l/2); got l=" + std::to_string(l) +
                                    ", s=" + std::to_string(s));
    }
    if (!(alpha.value() + (l - 2 * s) > 0)) throw std::domain_error("multistep recurrence: Gamma argument <= 0");
}

} // namespace detail

/// Coefficient of (r/2)^{2(s-k)} j_{alpha+l-2k}(r) in the multi-step recurrence for j_{alpha+l-s}:
/// s! Gamma(a+1-s) Gamma(a-k-s) / (k! (s-k)! Gamma(a+1-k) Gamma(a-2k)), a = alpha + l.
inline Rational multistep_coefficient(const Alpha& alpha, int l, int s, int k)
{
    detail::check_multistep(alpha, l, s);
    if (k < 0 || k > s) throw std::out_of_range("multistep_coefficient: k outside 0..s");
    const Rational a = alpha.value() + l;
    Rational c = factorial(static_cast<unsigned>(s));
    c /= factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(s - k));
    c /= rising(a + 1 - s, static_cast<unsigned>(s - k));
    c /= rising(a - k - s, static_cast<unsigned>(s - k));
    return c;
}

/// Coefficient of J_{alpha+l-2k} in the first-kind form:
/// Gamma(a-k-s) Gamma(a+1-2k) / (k! (s-k)! Gamma(a+1-k) Gamma(a-2k)) = (a-2k) / (k! (s-k)! (a-k-s)_{s+1}).
inline Rational multistep_coefficient_J(const Alpha& alpha, int l, int s, int k)
{
    detail::check_multistep(alpha, l, s);
    if (k < 0 || k > s) throw std::out_of_range("multistep_coefficient_J: k outside 0..s");
    const Rational a = alpha.value() + l;
    Rational c = a - 2 * k;
    c /= factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(s - k));
    c /= rising(a - k - s, static_cast<unsigned>(s + 1));
    return c;
}

/// |j_{alpha+l-s}(r) - sum_k c_k (r/2)^{2(s-k)} j_{alpha+l-2k}(r)|.
inline double multistep_residual(const Alpha& alpha, int l, int s, double r)
{
    detail::check_multistep(alpha, l, s);
    const Rational a = alpha.value() + l;
    const double lhs = spherical_j(a - s, r);
    const double half_r2 = (r / 2.0) * (r / 2.0);
    long double rhs = 0;
    for (int k = 0; k <= s; ++k) {
        rhs += static_cast<long double>(to_double(multistep_coefficient(alpha, l, s, k))) * std::pow(half_r2, s - k) *
               spherical_j(a - 2 * k, r);
    }
    return static_cast<double>(std::abs(lhs - rhs));
}

/// |(1/s!) (2/r)^s J_{alpha+l-s}(r) - sum_k b_k J_{alpha+l-2k}(r)|, r > 0.
inline double multistep_residual_J(const Alpha& alpha, int l, int s, double r)
{
    detail::check_multistep(alpha, l, s);
    if (!(r > 0.0)) throw std::domain_error("multistep_residual_J: r must be positive");
    const Rational a = alpha.value() + l;
    const double lhs = std::pow(2.0 / r, s) * bessel_j(a - s, r) / to_double(Rational(factorial(static_cast<unsigned>(s))));
    long double rhs = 0;
    for (int k = 0; k <= s; ++k) {
        rhs += static_cast<long double>(to_double(multistep_coefficient_J(alpha, l, s, k))) * bessel_j(a - 2 * k, r);
    }
    return static_cast<double>(std::abs(lhs - rhs));
}

/// Integer order: |(1/n!) (2/t)^n J_n(t) - sum_k eps_k / ((n+k)! (n-k)!) J_{2k}(t)|, eps_0 = 1, eps_k = 2.
inline double finite_expansion_integer_residual(int n, double t)
{
    if (n < 0) throw std::invalid_argument("finite_expansion_integer_residual: negative n");
    if (!(t > 0.0)) throw std::domain_error("finite_expansion_integer_residual: t must be positive");
    const double lhs = std::pow(2.0 / t, n) * bessel_j(Rational(n), t) / to_double(Rational(factorial(static_cast<unsigned>(n))));
    long double rhs = 0;
    for (int k = 0; k <= n; ++k) {
        const Rational c = Rational(k == 0 ? 1 : 2) /
                           (factorial(static_cast<unsigned>(n + k)) * factorial(static_cast<unsigned>(n - k)));
        rhs += static_cast<long double>(to_double(c)) * bessel_j(Rational(2 * k), t);
    }
    return static_cast<double>(std::abs(lhs - rhs));
}

/// Closed form of J_{n+1/2}(t) as the finite sin/cos sums, accumulated in long double
/// (the sums cancel heavily for t < n).
inline double half_odd_closed_form(int n, double t)
{
    if (n < 0) throw std::invalid_argument("half_odd_closed_form: negative n");
    if (!(t > 0.0)) throw std::domain_error("half_odd_closed_form: t must be positive");
    const long double pi = std::numbers::pi_v<long double>;
    const long double x = t;
    const long double phase = x - n * pi / 2.0L;
    auto coefficient = [](int top, int low) {
        const Rational c = Rational(factorial(static_cast<unsigned>(top))) /
                           (factorial(static_cast<unsigned>(low)) * factorial(static_cast<unsigned>(top - 2 * low)));
        return static_cast<long double>(to_double(c));
    };
    long double sin_sum = 0;
    for (int k = 0; k <= n / 2; ++k) {
        const long double term = coefficient(n + 2 * k, 2 * k) / std::pow(2.0L * x, 2 * k);
        sin_sum += k % 2 == 0 ? term : -term;
    }
    long double cos_sum = 0;
    for (int k = 0; k <= (n - 1) / 2 && n >= 1; ++k) {
        const long double term = coefficient(n + 2 * k + 1, 2 * k + 1) / std::pow(2.0L * x, 2 * k + 1);
        cos_sum += k % 2 == 0 ? term : -term;
    }
    return static_cast<double>(std::sqrt(2.0L / (pi * x)) * (std::sin(phase) * sin_sum + std::cos(phase) * cos_sum));
}

/// |J_{n+1/2}(t) - closed form|.
inline double finite_expansion_halfodd_residual(int n, double t)
{
    return std::abs(bessel_j(make_rational(2 * n + 1, 2), t) - half_odd_closed_form(n, t));
}

} // namespace zh
