#pragma once

#include "bessel.hpp"
#include "harmonic.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace zh {

using Complex = std::complex<double>;

enum class FtMethod { components, laplacian_powers, oracle };

inline const char* to_string(FtMethod m)
{
    switch (m) {
    case FtMethod::components: return "components";
    case FtMethod::laplacian_powers: return "laplacian";
    case FtMethod::oracle: return "oracle";
    }
    return "unknown";
}

/// Value of integral_{S^{d-1}} e^{i(x|eta)} P(eta) dsigma(eta) at one point x.
/// Normalized measure, no (2 pi)^{-d/2} factor.
struct SphereFTResult {
    std::vector<double> point;
    Complex value;
    FtMethod method;
};

namespace detail {

inline Complex i_power(int n)
{
    static const Complex table[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    return table[((n % 4) + 4) % 4];
}

inline double euclidean_norm(std::span<const double> x)
{
    long double s = 0;
    for (double c : x) s += static_cast<long double>(c) * c;
    return static_cast<double>(std::sqrt(s));
}

inline void check_ft_point(const HomogeneousPolynomial& p, std::span<const double> x, double cap)
{
    require_same_dimension(x.size(), static_cast<std::size_t>(p.dimension()), "sphere Fourier transform point");
    if (p.dimension() < 3) throw std::invalid_argument("sphere Fourier transform needs d >= 3");
    const double r = euclidean_norm(x);
    if (!(r <= cap)) {
        throw std::domain_error("|x| = " + std::to_string(r) + " exceeds the supported radius " + std::to_string(cap));
    }
}

} // namespace detail

/// (i/2)^l sum_k (-1)^k 4^k Gamma(alpha+1) / Gamma(alpha+l+1-2k) j_{alpha+l-2k}(|x|) h_{l-2k}(P)(x).
inline SphereFTResult sphere_ft_components(const HomogeneousPolynomial& p, std::span<const double> x)
{
    detail::check_ft_point(p, x, bessel_series_cap);
    const Alpha alpha = Alpha::from_dimension(p.dimension());
    const int l = p.degree();
    const double r = detail::euclidean_norm(x);
    const HarmonicDecomposition dec = decompose(p);
    long double sum = 0;
    for (const auto& [k, h] : dec.components) {
        if (h.is_zero()) continue;
        Rational w = pow2(static_cast<unsigned>(2 * k));
        w /= pow2(static_cast<unsigned>(l)) * rising(alpha.value() + 1, static_cast<unsigned>(l - 2 * k));
        if (k % 2 == 1) w = -w;
        sum += static_cast<long double>(to_double(w)) * spherical_j(alpha.value() + (l - 2 * k), r) * evaluate(h, x);
    }
    return {std::vector<double>(x.begin(), x.end()), detail::i_power(l) * static_cast<double>(sum), FtMethod::components};
}

/// (i/2)^l sum_k (-1)^k Gamma(alpha+1) / (k! Gamma(alpha+l+1-k)) j_{alpha+l-k}(|x|) (Delta^k P)(x).
inline SphereFTResult sphere_ft_laplacian(const HomogeneousPolynomial& p, std::span<const double> x)
{
    detail::check_ft_point(p, x, bessel_series_cap);
    const Alpha alpha = Alpha::from_dimension(p.dimension());
    const int l = p.degree();
    const double r = detail::euclidean_norm(x);
    const auto lap = laplacian_powers(p);
    long double sum = 0;
    for (int k = 0; k <= l / 2; ++k) {
        const auto& q = lap[static_cast<std::size_t>(k)];
        if (q.is_zero()) continue;
        Rational w = 1;
        w /= pow2(static_cast<unsigned>(l)) * factorial(static_cast<unsigned>(k)) *
             rising(alpha.value() + 1, static_cast<unsigned>(l - k));
        if (k % 2 == 1) w = -w;
        sum += static_cast<long double>(to_double(w)) * spherical_j(alpha.value() + (l - k), r) * evaluate(q, x);
    }
    return {std::vector<double>(x.begin(), x.end()), detail::i_power(l) * static_cast<double>(sum), FtMethod::laplacian_powers};
}

/// Independent check: integrates the Taylor series e^{i(x|eta)} = sum_n i^n (x|eta)^n / n! against P
/// term by term with the exact monomial sphere integrals
///   integral eta^c dsigma = prod (c_i - 1)!! / (d (d+2) ... (d + |c| - 2)),  c even.
/// For a term c_b eta^b of P, sum_{|a|=n} x^a / a! * integral eta^{a+b} factors over coordinates,
/// so the inner sum is a convolution of d one-variable series.
inline SphereFTResult sphere_ft_oracle(const HomogeneousPolynomial& p, std::span<const double> x, double tol)
{
    detail::check_ft_point(p, x, 10.0);
    const auto d = static_cast<std::size_t>(p.dimension());
    const int l = p.degree();
    const double r = detail::euclidean_norm(x);
    long double coeff_mass = 0;
    for (const auto& [m, c] : p.terms()) coeff_mass += std::abs(static_cast<long double>(to_double(c)));

    // First n beyond the peak with |x|^n / n! * sum|c| < tol / 1000.
    int n_max = 0;
    {
        long double bound = coeff_mass;
        while (n_max < 400 && (n_max <= r || bound >= tol * 1e-3L)) {
            ++n_max;
            bound *= r / n_max;
        }
    }
    // den[n] = d (d+2) ... (d + (n+l) - 2) for even n + l.
    std::vector<long double> den(static_cast<std::size_t>(n_max + 1), 0.0L);
    for (int n = 0; n <= n_max; ++n) {
        const int total = n + l;
        if (total % 2 != 0) continue;
        long double v = 1;
        for (int j = 0; j < total / 2; ++j) v *= static_cast<long double>(d + 2 * static_cast<std::size_t>(j));
        den[static_cast<std::size_t>(n)] = v;
    }
    // odd double factorials (e-1)!! for e up to n_max + l
    std::vector<long double> dfact(static_cast<std::size_t>(n_max + l + 2), 0.0L);
    dfact[0] = 1;
    for (std::size_t e = 2; e < dfact.size(); e += 2) dfact[e] = dfact[e - 2] * static_cast<long double>(e - 1);

    std::complex<long double> total(0);
    std::vector<long double> conv;
    std::vector<long double> next;
    std::vector<long double> series;
    for (const auto& [mono, coeff] : p.terms()) {
        conv.assign(static_cast<std::size_t>(n_max + 1), 0.0L);
        conv[0] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            // series[a] = x_i^a / a! * (a + b_i - 1)!! when a + b_i is even
            series.assign(static_cast<std::size_t>(n_max + 1), 0.0L);
            long double pw = 1; // x_i^a / a!
            for (int a = 0; a <= n_max; ++a) {
                if (a > 0) pw *= static_cast<long double>(x[i]) / a;
                const unsigned e = static_cast<unsigned>(a) + mono[i];
                if (e % 2 == 0) series[static_cast<std::size_t>(a)] = pw * dfact[e];
            }
            next.assign(static_cast<std::size_t>(n_max + 1), 0.0L);
            for (int u = 0; u <= n_max; ++u) {
                if (conv[static_cast<std::size_t>(u)] == 0) continue;
                for (int v = 0; u + v <= n_max; ++v) {
                    next[static_cast<std::size_t>(u + v)] += conv[static_cast<std::size_t>(u)] * series[static_cast<std::size_t>(v)];
                }
            }
            conv.swap(next);
        }
        std::complex<long double> term_sum(0);
        for (int n = 0; n <= n_max; ++n) {
            if ((n + l) % 2 != 0 || conv[static_cast<std::size_t>(n)] == 0) continue;
            const long double v = conv[static_cast<std::size_t>(n)] / den[static_cast<std::size_t>(n)];
            const Complex ip = detail::i_power(n);
            term_sum += std::complex<long double>(ip.real(), ip.imag()) * v;
        }
        total += term_sum * static_cast<long double>(to_double(coeff));
    }
    return {std::vector<double>(x.begin(), x.end()), Complex(static_cast<double>(total.real()), static_cast<double>(total.imag())),
            FtMethod::oracle};
}

inline SphereFTResult sphere_ft_components(const HomogeneousPolynomial& p, const std::vector<double>& x)
{
    return sphere_ft_components(p, std::span<const double>(x));
}
inline SphereFTResult sphere_ft_laplacian(const HomogeneousPolynomial& p, const std::vector<double>& x)
{
    return sphere_ft_laplacian(p, std::span<const double>(x));
}
inline SphereFTResult sphere_ft_oracle(const HomogeneousPolynomial& p, const std::vector<double>& x, double tol)
{
    return sphere_ft_oracle(p, std::span<const double>(x), tol);
}

// ---------------------------------------------------------------------------
// Hankel transform

enum class DecayClass { gaussian_like, compactly_supported, polynomial_decay };

/// Radial function on [0, inf), treated as zero beyond `truncation_radius`.
class RadialProfile {
public:
    using Evaluator = std::function<double(double)>;

    RadialProfile(Evaluator evaluator, DecayClass decay, double truncation_radius, double decay_power = 0.0)
        : evaluator_(std::move(evaluator)), decay_(decay), truncation_radius_(truncation_radius), decay_power_(decay_power)
    {
        if (!evaluator_) throw std::invalid_argument("radial profile needs an evaluator");
        if (!(truncation_radius_ > 0.0) || !std::isfinite(truncation_radius_)) {
            throw std::invalid_argument("radial profile truncation radius must be positive and finite");
        }
        validate();
    }

    /// e^{-a s^2}, truncated where it falls below 1e-30.
    static RadialProfile gaussian(double a = 1.0)
    {
        if (!(a > 0.0)) throw std::invalid_argument("gaussian profile needs a > 0");
        return RadialProfile([a](double s) { return std::exp(-a * s * s); }, DecayClass::gaussian_like,
                             std::sqrt(30.0 * std::numbers::ln10 / a));
    }

    /// Smooth bump exp(-1 / (1 - (s/w)^2)) supported on [0, w).
    static RadialProfile bump(double width)
    {
        if (!(width > 0.0)) throw std::invalid_argument("bump profile needs a positive width");
        return RadialProfile(
            [width](double s) {
                const double u = s / width;
                return u < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
            },
            DecayClass::compactly_supported, width);
    }

    /// s^power * phi(s), same decay class and truncation radius.
    RadialProfile times_power(int power) const
    {
        if (power < 0) throw std::invalid_argument("times_power: negative power");
        return RadialProfile([f = evaluator_, power](double s) { return std::pow(s, power) * f(s); }, decay_,
                             truncation_radius_, decay_power_ > 0.0 ? decay_power_ - power : decay_power_);
    }

    /// a phi + b psi on the larger truncation radius.
    static RadialProfile linear_combination(double a, const RadialProfile& phi, double b, const RadialProfile& psi)
    {
        const DecayClass decay = phi.decay_ == psi.decay_ ? phi.decay_ : DecayClass::polynomial_decay;
        return RadialProfile([a, b, f = phi.evaluator_, g = psi.evaluator_](double s) { return a * f(s) + b * g(s); }, decay,
                             std::max(phi.truncation_radius_, psi.truncation_radius_),
                             std::min(phi.decay_power_, psi.decay_power_));
    }

    double operator()(double s) const { return evaluator_(s); }
    DecayClass decay_class() const { return decay_; }
    double truncation_radius() const { return truncation_radius_; }
    double decay_power() const { return decay_power_; }

private:
    /// |phi| beyond the truncation radius must sit below 1e-16 of its maximum inside.
    void validate() const
    {
        constexpr int samples = 256;
        double inside = 0.0;
        for (int i = 0; i <= samples; ++i) inside = std::max(inside, std::abs(evaluator_(truncation_radius_ * i / samples)));
        for (int i = 1; i <= samples; ++i) {
            const double s = truncation_radius_ * (1.0 + 3.0 * i / samples);
            const double v = std::abs(evaluator_(s));
            if (!(v <= 1e-16 * inside) && v != 0.0) {
                throw std::invalid_argument("radial profile is not negligible beyond its truncation radius (|phi(" +
                                            std::to_string(s) + ")| = " + std::to_string(v) + ")");
            }
        }
    }

    Evaluator evaluator_;
    DecayClass decay_;
    double truncation_radius_;
    double decay_power_;
};

struct HankelResult {
    BesselOrder order;
    double at;
    double value;
    double quadrature_error_estimate;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(double best_value, double error_estimate, double tol)
        : std::runtime_error("quadrature error estimate " + std::to_string(error_estimate) + " exceeds tolerance " +
                             std::to_string(tol)),
          best_value_(best_value), error_estimate_(error_estimate)
    {
    }
    double best_value() const { return best_value_; }
    double error_estimate() const { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

inline constexpr int hankel_gauss_order = 16;

inline const GaussLegendreRule<double>& hankel_rule()
{
    static const GaussLegendreRule<double> rule = gauss_legendre_rule<double>(hankel_gauss_order);
    return rule;
}

/// H_nu(phi)(t) = 2^{-nu} / Gamma(nu+1) integral_0^inf phi(s) j_nu(st) s^{2nu+1} ds.
inline HankelResult hankel(const RadialProfile& profile, const BesselOrder& nu, double t, double tol)
{
    if (!(t >= 0.0)) throw std::domain_error("hankel: t must be nonnegative");
    if (!(tol > 0.0)) throw std::invalid_argument("hankel: tolerance must be positive");
    const double radius = profile.truncation_radius();
    if (t * radius > bessel_series_cap) {
        throw std::domain_error("hankel: s*t reaches " + std::to_string(t * radius) + " on the truncated domain, beyond the Bessel cap");
    }
    const double nu_d = nu.to_double();
    const double prefactor = std::pow(2.0, -nu_d) / gamma_value(nu.value() + 1);
    const double power = 2.0 * nu_d + 1.0;
    auto integrand = [&](double s) { return profile(s) * spherical_j(nu, s * t) * std::pow(s, power); };
    double width = radius / 8.0;
    if (t > 1.0) width = std::min(width, std::numbers::pi / (2.0 * t));
    const QuadratureEstimate q = adaptive_gauss_legendre(hankel_rule(), integrand, 0.0, radius, tol / prefactor, width);
    const double value = prefactor * q.value;
    const double err = prefactor * q.error;
    if (err > tol) throw QuadratureError(value, err, tol);
    return {nu, t, value, err};
}

namespace detail {

inline void check_bochner(const HomogeneousPolynomial& p, std::span<const double> y)
{
    require_same_dimension(y.size(), static_cast<std::size_t>(p.dimension()), "Bochner evaluation point");
    if (p.dimension() < 3) throw std::invalid_argument("Bochner identity needs d >= 3");
}

} // namespace detail

/// (2 pi)^{-d/2} integral f(|x|) P(x) e^{i(y|x)} dx = i^l sum_k (-1)^k H_{alpha+l-2k}(s^{2k} f)(|y|) h_{l-2k}(P)(y).
inline Complex bochner_components(const RadialProfile& f, const HomogeneousPolynomial& p, std::span<const double> y, double tol)
{
    detail::check_bochner(p, y);
    const Alpha alpha = Alpha::from_dimension(p.dimension());
    const int l = p.degree();
    const double r = detail::euclidean_norm(y);
    const HarmonicDecomposition dec = decompose(p);
    const double share = tol / static_cast<double>(dec.components.size());
    long double sum = 0;
    for (const auto& [k, h] : dec.components) {
        if (h.is_zero()) continue;
        const double hy = evaluate(h, y);
        const BesselOrder order(alpha.value() + (l - 2 * k));
        const double hk = hankel(f.times_power(2 * k), order, r, share / std::max(1.0, std::abs(hy))).value;
        sum += (k % 2 == 0 ? 1.0L : -1.0L) * hk * hy;
    }
    return detail::i_power(l) * static_cast<double>(sum);
}

/// Same transform as i^l sum_k (-1)^k / (2^k k!) H_{alpha+l-k}(f)(|y|) (Delta^k P)(y).
inline Complex bochner_laplacian(const RadialProfile& f, const HomogeneousPolynomial& p, std::span<const double> y, double tol)
{
    detail::check_bochner(p, y);
    const Alpha alpha = Alpha::from_dimension(p.dimension());
    const int l = p.degree();
    const double r = detail::euclidean_norm(y);
    const auto lap = laplacian_powers(p);
    const double share = tol / static_cast<double>(lap.size());
    long double sum = 0;
    for (int k = 0; k <= l / 2; ++k) {
        const auto& q = lap[static_cast<std::size_t>(k)];
        if (q.is_zero()) continue;
        const double coeff = to_double(Rational(1) / (pow2(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(k))));
        const double qy = coeff * evaluate(q, y);
        const BesselOrder order(alpha.value() + (l - k));
        const double hk = hankel(f, order, r, share / std::max(1.0, std::abs(qy))).value;
        sum += (k % 2 == 0 ? 1.0L : -1.0L) * hk * qy;
    }
    return detail::i_power(l) * static_cast<double>(sum);
}

inline Complex bochner_components(const RadialProfile& f, const HomogeneousPolynomial& p, const std::vector<double>& y, double tol)
{
    return bochner_components(f, p, std::span<const double>(y), tol);
}
inline Complex bochner_laplacian(const RadialProfile& f, const HomogeneousPolynomial& p, const std::vector<double>& y, double tol)
{
    return bochner_laplacian(f, p, std::span<const double>(y), tol);
}

/// Residual of the Hankel periodicity relation
///   t^2 H_{alpha+l}(phi)(t) = 2(alpha+l-1) H_{alpha+l-1}(phi)(t) - H_{alpha+l-2}(s^2 phi)(t).
/// The t^2 factor follows from the s = 1 multistep recurrence; without it the relation fails at t = 0.
inline double hankel_periodicity_residual(const RadialProfile& profile, const Alpha& alpha, int l, double t, double tol)
{
    const Rational mu = alpha.value() + l;
    if (!(mu - 2 > -1)) throw std::invalid_argument("hankel periodicity needs alpha + l - 2 > -1");
    const double sub_tol = tol / 10.0;
    const double top = hankel(profile, BesselOrder(mu), t, sub_tol).value;
    const double mid = hankel(profile, BesselOrder(mu - 1), t, sub_tol).value;
    const double low = hankel(profile.times_power(2), BesselOrder(mu - 2), t, sub_tol).value;
    return std::abs(t * t * top - (2.0 * to_double(mu - 1) * mid - low));
}

} // namespace zh
