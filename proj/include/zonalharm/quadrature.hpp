#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zh {

/// Gauss-Legendre nodes and weights on [-1, 1].
template <typename Real>
struct GaussLegendreRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;

    int order() const { return static_cast<int>(nodes.size()); }
};

/// Roots of P_n by Newton iteration from the Chebyshev-like initial guesses.
template <typename Real>
GaussLegendreRule<Real> gauss_legendre_rule(int n)
{
    using std::abs;
    using std::cos;
    if (n < 1) throw std::invalid_argument("gauss_legendre_rule: order must be positive");
    GaussLegendreRule<Real> rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const Real pi = std::numbers::pi_v<double>;
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real derivative = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0 = 1;
            Real p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            derivative = n * (x * p1 - p0) / (x * x - 1);
            const Real dx = p1 / derivative;
            x -= dx;
            if (abs(dx) <= 4 * eps) break;
        }
        // Recompute the derivative at the converged node.
        Real p0 = 1;
        Real p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        derivative = n == 1 ? Real(1) : Real(n * (x * p1 - p0) / (x * x - 1));
        const Real w = 2 / ((1 - x * x) * derivative * derivative);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0;
    return rule;
}

template <typename Real, typename F>
Real apply_rule(const GaussLegendreRule<Real>& rule, F&& f, Real a, Real b)
{
    const Real half = (b - a) / 2;
    const Real mid = (a + b) / 2;
    Real sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

/// Fixed composite rule: `panels` equal panels on [a, b].
template <typename Real, typename F>
Real composite_gauss_legendre(const GaussLegendreRule<Real>& rule, F&& f, Real a, Real b, int panels)
{
    const Real h = (b - a) / panels;
    Real sum = 0;
    for (int p = 0; p < panels; ++p) sum += apply_rule(rule, f, a + p * h, a + (p + 1) * h);
    return sum;
}

struct QuadratureEstimate {
    double value = 0.0;
    double error = 0.0; ///< sum over accepted panels of |coarse - refined|
    int panels = 0;
    bool converged = true;
};

/// Adaptive composite Gauss-Legendre with interval halving. The initial panels are no wider
/// than `max_panel_width`; a panel is accepted when the one-panel and two-half-panel results
/// agree to its share of `tol`, or to roundoff.
template <typename F>
QuadratureEstimate adaptive_gauss_legendre(const GaussLegendreRule<double>& rule, F&& f, double a, double b, double tol,
                                           double max_panel_width, int max_depth = 20)
{
    QuadratureEstimate out;
    if (b <= a) return out;
    const double length = b - a;
    const int initial = std::max(1, static_cast<int>(std::ceil(length / max_panel_width)));
    const double h = length / initial;
    const double eps = std::numeric_limits<double>::epsilon();

    struct Panel {
        double a, b, coarse;
        int depth;
    };
    std::vector<Panel> stack;
    for (int p = initial - 1; p >= 0; --p) {
        const double pa = a + p * h;
        const double pb = p + 1 == initial ? b : a + (p + 1) * h;
        stack.push_back({pa, pb, apply_rule(rule, f, pa, pb), 0});
    }
    auto abs_f = [&f](double x) { return std::abs(f(x)); };
    while (!stack.empty()) {
        const Panel panel = stack.back();
        stack.pop_back();
        const double mid = (panel.a + panel.b) / 2;
        const double left = apply_rule(rule, f, panel.a, mid);
        const double right = apply_rule(rule, f, mid, panel.b);
        const double refined = left + right;
        const double diff = std::abs(refined - panel.coarse);
        const double local_tol = tol * (panel.b - panel.a) / length;
        const double floor = 64 * eps * apply_rule(rule, abs_f, panel.a, panel.b);
        if (diff <= std::max(local_tol, floor) || panel.depth >= max_depth) {
            if (diff > std::max(local_tol, floor)) out.converged = false;
            out.value += refined;
            out.error += diff;
            ++out.panels;
            continue;
        }
        stack.push_back({mid, panel.b, right, panel.depth + 1});
        stack.push_back({panel.a, mid, left, panel.depth + 1});
    }
    return out;
}

} // namespace zh
