#pragma once

// Brute-force reference computations that share no code path with the closed-form formulas
// they check. Used by the verification suites and the test binaries.

#include "polynomial.hpp"
#include "zonal.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <span>
#include <vector>

namespace zh::oracle {

/// Coefficient of Z^m_eta in the zonal expansion from the Gegenbauer integral
///   F_m = (alpha+m) Gamma(alpha) / (sqrt(pi) Gamma(alpha+1/2)) int_{-1}^{1} phi(t) C_m(t) (1-t^2)^{alpha-1/2} dt,
/// integrated in theta (t = cos theta) with adaptive Gauss-Kronrod.
inline std::complex<double> gegenbauer_integral_coefficient(const ZonalProfile& profile, double alpha, int m, double tol = 1e-14)
{
    using boost::math::quadrature::gauss_kronrod;
    const double norm = (alpha + m) * std::tgamma(alpha) / (std::sqrt(std::numbers::pi) * std::tgamma(alpha + 0.5));
    auto weight = [alpha, m](double theta) {
        const double t = std::cos(theta);
        return boost::math::gegenbauer(static_cast<unsigned>(m), alpha, t) * std::pow(std::sin(theta), 2.0 * alpha);
    };
    auto re = [&](double theta) { return profile(std::cos(theta)).real() * weight(theta); };
    auto im = [&](double theta) { return profile(std::cos(theta)).imag() * weight(theta); };
    const double vr = gauss_kronrod<double, 31>::integrate(re, 0.0, std::numbers::pi, 20, tol);
    const double vi = gauss_kronrod<double, 31>::integrate(im, 0.0, std::numbers::pi, 20, tol);
    return norm * std::complex<double>(vr, vi);
}

/// dim ker(Delta : P^l -> P^{l-2}) by exact Gaussian elimination on the monomial basis.
inline long harmonic_dim_by_rank(int d, int l)
{
    // enumerate exponent vectors of total degree `deg`
    auto monomials = [d](int deg) {
        std::vector<std::vector<unsigned>> out;
        std::vector<unsigned> e(static_cast<std::size_t>(d), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == d - 1) {
                e[static_cast<std::size_t>(pos)] = static_cast<unsigned>(left);
                out.push_back(e);
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[static_cast<std::size_t>(pos)] = static_cast<unsigned>(v);
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, deg);
        return out;
    };
    const auto cols = monomials(l);
    if (l < 2) return static_cast<long>(cols.size());
    const auto rows = monomials(l - 2);
    std::map<std::vector<unsigned>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    // matrix[row][col], Delta x^e = sum_i e_i (e_i - 1) x^{e - 2 e_i}
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
            const unsigned e = cols[c][i];
            if (e < 2) continue;
            auto target = cols[c];
            target[i] -= 2;
            a[row_index.at(target)][c] += e * (e - 1);
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols.size(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return static_cast<long>(cols.size() - rank);
}

/// Gauss-Hermite nodes/weights for weight e^{-x^2}, by Newton iteration on the orthonormal recurrence.
struct HermiteRule {
    std::vector<long double> nodes;
    std::vector<long double> weights;
};

inline HermiteRule gauss_hermite_rule(int n)
{
    HermiteRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const long double pim4 = 0.7511255444649425L; // pi^{-1/4}
    long double z = 0;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        if (i == 0) {
            z = std::sqrt(static_cast<long double>(2 * n + 1)) - 1.85575L * std::pow(static_cast<long double>(2 * n + 1), -0.16667L);
        } else if (i == 1) {
            z -= 1.14L * std::pow(static_cast<long double>(n), 0.426L) / z;
        } else if (i == 2) {
            z = 1.86L * z - 0.86L * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91L * z - 0.91L * rule.nodes[1];
        } else {
            z = 2.0L * z - rule.nodes[static_cast<std::size_t>(i - 2)];
        }
        long double pp = 0;
        for (int iter = 0; iter < 200; ++iter) {
            long double p1 = pim4;
            long double p2 = 0;
            for (int j = 0; j < n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0L / (j + 1)) * p2 - std::sqrt(static_cast<long double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0L * n) * p2;
            const long double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-18L) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -z;
        rule.weights[static_cast<std::size_t>(i)] = 2.0L / (pp * pp);
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0L / (pp * pp);
    }
    return rule;
}

/// (2 pi)^{-d/2} int_{R^d} e^{-a|x|^2} P(x) e^{i(y|x)} dx by tensor-product Gauss-Hermite.
/// The integrand of each monomial is a product of one-variable factors, so the tensor rule
/// is summed one axis at a time.
inline std::complex<double> gaussian_fourier_transform(const HomogeneousPolynomial& p, double a, std::span<const double> y,
                                                       int nodes = 64)
{
    require_same_dimension(y.size(), static_cast<std::size_t>(p.dimension()), "gaussian_fourier_transform");
    const HermiteRule rule = gauss_hermite_rule(nodes);
    const long double scale = 1.0L / std::sqrt(static_cast<long double>(a));
    const int max_e = p.degree();
    // axis[i][e] = int e^{-a x^2} x^e e^{i y_i x} dx / sqrt(2 pi)
    std::vector<std::vector<std::complex<long double>>> axis(y.size(),
                                                             std::vector<std::complex<long double>>(static_cast<std::size_t>(max_e + 1)));
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (int e = 0; e <= max_e; ++e) {
            std::complex<long double> s(0);
            for (int q = 0; q < nodes; ++q) {
                const long double x = rule.nodes[static_cast<std::size_t>(q)] * scale;
                const long double w = rule.weights[static_cast<std::size_t>(q)] * scale;
                const long double ph = static_cast<long double>(y[i]) * x;
                s += w * std::pow(x, e) * std::complex<long double>(std::cos(ph), std::sin(ph));
            }
            axis[i][static_cast<std::size_t>(e)] = s / std::sqrt(2.0L * std::numbers::pi_v<long double>);
        }
    }
    std::complex<long double> total(0);
    for (const auto& [mono, coeff] : p.terms()) {
        std::complex<long double> term(static_cast<long double>(to_double(coeff)));
        for (std::size_t i = 0; i < y.size(); ++i) term *= axis[i][mono[i]];
        total += term;
    }
    return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

} // namespace zh::oracle
