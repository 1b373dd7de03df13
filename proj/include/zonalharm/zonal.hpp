#pragma once

#include "bessel.hpp"
#include "gegenbauer.hpp"
#include "harmonic.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zh {

using Complex = std::complex<double>;

/// Profile phi of a zonal function f(xi) = phi((xi|eta)), given by truncated Taylor data
/// a_n = phi^(n)(0) / n! for n < N. `tail_bound(p)` bounds sum_{n >= N, n = p mod 2} |a_n|.
class ZonalProfile {
public:
    using Evaluator = std::function<Complex(double)>;

    ZonalProfile(std::vector<Complex> taylor, std::array<double, 2> tail_bounds, Evaluator evaluator = {})
        : taylor_(std::move(taylor)), tail_bounds_(tail_bounds), evaluator_(std::move(evaluator))
    {
        if (taylor_.empty()) throw std::invalid_argument("zonal profile needs at least one Taylor coefficient");
        double total = 0.0;
        for (const Complex& a : taylor_) total += std::abs(a);
        if (!std::isfinite(total)) throw std::invalid_argument("zonal profile Taylor coefficients are not absolutely summable");
        for (double b : tail_bounds_) {
            if (!(b >= 0.0)) throw std::invalid_argument("zonal profile tail bound must be nonnegative");
        }
    }

    /// Taylor data with the tail estimated from the geometric ratio of the last five entries of each parity.
    static ZonalProfile from_taylor(std::vector<Complex> taylor)
    {
        std::array<double, 2> tails{0.0, 0.0};
        const int n = static_cast<int>(taylor.size());
        for (int parity = 0; parity < 2; ++parity) {
            std::vector<double> last;
            int idx = n - 1;
            if ((idx & 1) != parity) --idx;
            for (; idx >= 0 && last.size() < 5; idx -= 2) last.push_back(std::abs(taylor[static_cast<std::size_t>(idx)]));
            bool all_zero = true;
            for (double v : last) all_zero = all_zero && v == 0.0;
            if (all_zero) continue;
            if (last.size() < 2 || last.back() == 0.0 || last.front() == 0.0) {
                tails[static_cast<std::size_t>(parity)] = std::numeric_limits<double>::infinity();
                continue;
            }
            const double q = std::pow(last.front() / last.back(), 1.0 / static_cast<double>(last.size() - 1));
            tails[static_cast<std::size_t>(parity)] =
                q < 1.0 ? last.front() * q / (1.0 - q) : std::numeric_limits<double>::infinity();
        }
        return ZonalProfile(std::move(taylor), tails);
    }

    static ZonalProfile constant(Complex c)
    {
        return ZonalProfile({c}, {0.0, 0.0}, [c](double) { return c; });
    }

    /// phi(t) = t^l
    static ZonalProfile monomial(int l)
    {
        if (l < 0) throw std::invalid_argument("monomial profile: negative degree");
        std::vector<Complex> taylor(static_cast<std::size_t>(l + 1), Complex(0.0));
        taylor.back() = 1.0;
        return ZonalProfile(std::move(taylor), {0.0, 0.0}, [l](double t) { return Complex(std::pow(t, l)); });
    }

    /// phi(t) = e^{irt}
    static ZonalProfile plane_wave(double r)
    {
        std::vector<Complex> taylor{Complex(1.0)};
        Complex a(1.0);
        const Complex ir(0.0, r);
        for (int n = 1; n <= 170; ++n) {
            a *= ir / static_cast<double>(n);
            if (std::abs(a) < 1e-320) break;
            taylor.push_back(a);
        }
        const auto N = static_cast<double>(taylor.size());
        const double next = std::abs(taylor.back()) * std::abs(r) / N;
        const double q = std::abs(r) / (N + 1.0);
        const double tail = q < 1.0 ? next / (1.0 - q) : std::numeric_limits<double>::infinity();
        return ZonalProfile(std::move(taylor), {tail, tail}, [r](double t) { return std::exp(Complex(0.0, r * t)); });
    }

    /// phi(t) = (1 - 2rt + r^2)^{-alpha}, |r| < 1.
    static ZonalProfile gegenbauer_generating(double alpha, double r)
    {
        if (!(std::abs(r) < 1.0)) throw std::invalid_argument("generating profile needs |r| < 1");
        const double u = 2.0 * r / (1.0 + r * r);
        const double scale = std::pow(1.0 + r * r, -alpha);
        std::vector<Complex> taylor{Complex(scale)};
        double a = scale;
        for (int n = 1; n < 4000; ++n) {
            a *= (alpha + n - 1) * u / n;
            taylor.push_back(a);
            if (std::abs(a) < 1e-40 * scale && (alpha + n) / (n + 1) * std::abs(u) < 1.0) break;
        }
        const auto N = static_cast<double>(taylor.size());
        const double q = std::abs(u) * std::max(1.0, (alpha + N) / (N + 1.0));
        const double next = std::abs(taylor.back().real()) * (alpha + N - 1) * std::abs(u) / N;
        const double tail = q < 1.0 ? next / (1.0 - q) : std::numeric_limits<double>::infinity();
        return ZonalProfile(std::move(taylor), {tail, tail},
                            [alpha, r](double t) { return Complex(std::pow(1.0 - 2.0 * r * t + r * r, -alpha)); });
    }

    /// a * phi + b * psi
    static ZonalProfile linear_combination(Complex a, const ZonalProfile& phi, Complex b, const ZonalProfile& psi)
    {
        // A sequence with a nonzero tail has unknown entries past its end, so keep only the common known prefix.
        std::size_t n = std::max(phi.taylor_.size(), psi.taylor_.size());
        if (!phi.is_exact()) n = std::min(n, phi.taylor_.size());
        if (!psi.is_exact()) n = std::min(n, psi.taylor_.size());
        std::vector<Complex> full(std::max(phi.taylor_.size(), psi.taylor_.size()), Complex(0.0));
        for (std::size_t i = 0; i < phi.taylor_.size(); ++i) full[i] += a * phi.taylor_[i];
        for (std::size_t i = 0; i < psi.taylor_.size(); ++i) full[i] += b * psi.taylor_[i];
        std::array<double, 2> tails{};
        for (std::size_t p = 0; p < 2; ++p) tails[p] = std::abs(a) * phi.tail_bounds_[p] + std::abs(b) * psi.tail_bounds_[p];
        for (std::size_t i = n; i < full.size(); ++i) tails[i & 1u] += std::abs(full[i]);
        full.resize(n);
        Evaluator eval;
        if (phi.evaluator_ && psi.evaluator_) {
            eval = [a, b, f = phi.evaluator_, g = psi.evaluator_](double t) { return a * f(t) + b * g(t); };
        }
        return ZonalProfile(std::move(full), tails, std::move(eval));
    }

    /// True when the Taylor data is the whole series (a polynomial profile).
    bool is_exact() const { return tail_bounds_[0] == 0.0 && tail_bounds_[1] == 0.0; }

    const std::vector<Complex>& taylor() const { return taylor_; }
    double tail_bound(int parity) const { return tail_bounds_[static_cast<std::size_t>(parity & 1)]; }
    bool has_evaluator() const { return static_cast<bool>(evaluator_); }

    /// phi(t) through the evaluator when present, otherwise the Taylor partial sum.
    Complex operator()(double t) const
    {
        if (evaluator_) return evaluator_(t);
        Complex sum(0.0);
        for (auto it = taylor_.rbegin(); it != taylor_.rend(); ++it) sum = sum * t + *it;
        return sum;
    }

private:
    std::vector<Complex> taylor_;
    std::array<double, 2> tail_bounds_;
    Evaluator evaluator_;
};

/// Thrown when the Taylor data cannot deliver the requested number of coefficients.
class InsufficientTaylorData : public std::runtime_error {
public:
    InsufficientTaylorData(int requested, int achievable)
        : std::runtime_error("insufficient Taylor data for " + std::to_string(requested) +
                             " terms; achievable truncation M = " + std::to_string(achievable)),
          achievable_(achievable)
    {
    }
    int achievable() const { return achievable_; }

private:
    int achievable_;
};

/// f(xi) = Gamma(alpha+1) sum_{m<=M} f_m dim H^m Z^m_eta(xi).
struct ZonalExpansion {
    Alpha alpha;
    std::vector<Complex> coefficients; ///< f_m
    std::vector<double> weights;       ///< Gamma(alpha+1) dim H^m
    double tail_estimate = 0.0;        ///< estimate of sum_{m>M} |weight_m f_m|

    int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
    Complex term_coefficient(int m) const
    {
        return weights[static_cast<std::size_t>(m)] * coefficients[static_cast<std::size_t>(m)];
    }
};

namespace detail {

/// Geometric-ratio estimate of sum_{m>M} |c_m| from the last five nonzero magnitudes.
inline double geometric_tail(const std::vector<double>& magnitudes)
{
    std::vector<std::pair<int, double>> last;
    for (int m = static_cast<int>(magnitudes.size()) - 1; m >= 0 && last.size() < 5; --m) {
        if (magnitudes[static_cast<std::size_t>(m)] != 0.0) last.emplace_back(m, magnitudes[static_cast<std::size_t>(m)]);
    }
    if (last.empty()) return 0.0;
    if (last.size() < 2) return std::numeric_limits<double>::infinity();
    const double steps = last.front().first - last.back().first;
    const double q = std::pow(last.front().second / last.back().second, 1.0 / steps);
    if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
    const int gap = static_cast<int>(magnitudes.size()) - 1 - last.front().first;
    return last.front().second * std::pow(q, gap + 1) / (1.0 - q);
}

} // namespace detail

/// Coefficients f_m = sum_k phi^(m+2k)(0) / (2^{m+2k} k! Gamma(alpha+m+k+1)), m = 0..M.
inline ZonalExpansion expand(const ZonalProfile& profile, const Alpha& alpha, int max_degree)
{
    if (max_degree < 0) throw std::invalid_argument("expand: negative truncation");
    constexpr double rel_tol = 1e-16;
    constexpr int exact_limit = 30;
    const auto& a = profile.taylor();
    const int n_data = static_cast<int>(a.size());
    const double gamma_alpha1 = gamma_value(alpha.value() + 1);
    const double alpha_d = alpha.to_double();

    ZonalExpansion out{alpha, {}, {}, 0.0};
    int first_failure = -1;
    for (int m = 0; m <= max_degree; ++m) {
        // Scaled weight R(m,k) = (m+2k)! / (2^{m+2k} k! (alpha+1)_{m+k}) <= 1, so f_m = sum_k R a_{m+2k} / Gamma(alpha+1).
        Complex sum(0.0);
        bool stopped = false;
        double weight = 0.0;
        for (int k = 0; m + 2 * k < n_data; ++k) {
            const int n = m + 2 * k;
            if (k == 0 || m + k <= exact_limit) {
                Rational w = factorial(static_cast<unsigned>(n));
                w /= pow2(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(k));
                w /= rising(alpha.value() + 1, static_cast<unsigned>(m + k));
                weight = to_double(w);
            } else {
                weight *= static_cast<double>(n) * (n - 1) / (4.0 * k * (alpha_d + m + k));
            }
            const Complex term = weight * a[static_cast<std::size_t>(n)];
            sum += term;
            if (term != Complex(0.0) && std::abs(term) <= rel_tol * std::abs(sum)) {
                stopped = true;
                break;
            }
        }
        if (!stopped) {
            const double tail = profile.tail_bound(m);
            const bool converged = tail == 0.0 || tail <= rel_tol * std::abs(sum);
            if (!converged && first_failure < 0) first_failure = m;
        }
        out.coefficients.push_back(sum / gamma_alpha1);
        out.weights.push_back(gamma_alpha1 * harmonic_dim(alpha, m).get_d());
    }
    if (first_failure >= 0) throw InsufficientTaylorData(max_degree, first_failure - 1);

    std::vector<double> magnitudes;
    for (int m = 0; m <= max_degree; ++m) magnitudes.push_back(std::abs(out.term_coefficient(m)));
    const bool exhausted_exact = profile.is_exact() && max_degree >= n_data - 1;
    out.tail_estimate = exhausted_exact ? 0.0 : detail::geometric_tail(magnitudes);
    return out;
}

struct ExpansionValue {
    Complex value;
    double tail_bound; ///< |Z^m| <= 1, so the neglected series is bounded by the coefficient tail
};

inline ExpansionValue evaluate_expansion(const ZonalExpansion& expansion, const UnitVector& pole, const UnitVector& xi)
{
    require_same_dimension(static_cast<std::size_t>(pole.dimension()), static_cast<std::size_t>(xi.dimension()),
                           "evaluate_expansion");
    require_same_dimension(static_cast<std::size_t>(expansion.alpha.dimension()), static_cast<std::size_t>(pole.dimension()),
                           "evaluate_expansion");
    const int M = expansion.truncation();
    const double t = pole.dot(xi);
    const auto c = gegenbauer_values(expansion.alpha.to_double(), M, t);
    Complex sum(0.0);
    for (int m = 0; m <= M; ++m) {
        const double z = c[static_cast<std::size_t>(m)] / to_double(gegenbauer_at_one(expansion.alpha, m));
        sum += expansion.term_coefficient(m) * z;
    }
    return {sum, expansion.tail_estimate};
}

/// i^m dim H^m Gamma(alpha+1)/Gamma(alpha+m+1) (r/2)^m j_{alpha+m}(r), m = 0..M.
inline std::vector<Complex> plane_wave_coefficients(const Alpha& alpha, double r, int max_degree)
{
    if (!(r >= 0.0)) throw std::invalid_argument("plane_wave_coefficients: r must be nonnegative");
    std::vector<Complex> out;
    static const Complex i_powers[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    for (int m = 0; m <= max_degree; ++m) {
        const double scale = harmonic_dim(alpha, m).get_d() / to_double(rising(alpha.value() + 1, static_cast<unsigned>(m)));
        const double radial = std::pow(r / 2.0, m) * spherical_j(alpha.value() + m, r);
        out.push_back(i_powers[m % 4] * (scale * radial));
    }
    return out;
}

/// Partial sum of the plane-wave series for e^{i(x|eta)}, x = r xi.
inline Complex plane_wave_partial_sum(const Alpha& alpha, double r, const UnitVector& xi, const UnitVector& eta, int max_degree)
{
    const auto coeffs = plane_wave_coefficients(alpha, r, max_degree);
    const auto c = gegenbauer_values(alpha.to_double(), max_degree, xi.dot(eta));
    Complex sum(0.0);
    for (int m = 0; m <= max_degree; ++m) {
        sum += coeffs[static_cast<std::size_t>(m)] * (c[static_cast<std::size_t>(m)] / to_double(gegenbauer_at_one(alpha, m)));
    }
    return sum;
}

} // namespace zh
