#pragma once

#include "polynomial.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace zh {

/// Seeded generator for reproducible case lists. Integers are drawn by reducing raw engine
/// output, so the sequence does not depend on the standard library's distributions.
class CaseRng {
public:
    explicit CaseRng(std::uint64_t seed) : engine_(seed) {}

    /// uniform in [lo, hi]
    int integer(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    /// uniform in [lo, hi)
    double real(double lo, double hi)
    {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// point uniformly distributed on S^{d-1} (normalized Gaussian)
    std::vector<double> sphere_point(int d)
    {
        std::vector<double> v(static_cast<std::size_t>(d));
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (double& c : v) {
                // Box-Muller on raw uniforms
                const double u1 = real(0.0, 1.0);
                const double u2 = real(0.0, 1.0);
                c = std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
                norm2 += c * c;
            }
        } while (norm2 < 1e-12);
        const double n = std::sqrt(norm2);
        for (double& c : v) c /= n;
        return v;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Coefficient p/q with p in {-9..9}\{0}, q in 1..4.
inline Rational random_coefficient(CaseRng& rng)
{
    int p = 0;
    while (p == 0) p = rng.integer(-9, 9);
    return make_rational(p, rng.integer(1, 4));
}

inline Monomial random_monomial(CaseRng& rng, int d, int l)
{
    Monomial m = Monomial::zero(d);
    for (int unit = 0; unit < l; ++unit) m[static_cast<std::size_t>(rng.integer(0, d - 1))] += 1;
    return m;
}

/// Sparse random element of P^l with up to `max_terms` terms (nonzero unless every draw cancels).
inline HomogeneousPolynomial random_polynomial(CaseRng& rng, int d, int l, int max_terms)
{
    HomogeneousPolynomial p(d, l);
    const int terms = rng.integer(1, max_terms);
    for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, d, l), random_coefficient(rng));
    if (p.is_zero()) p.add_term(random_monomial(rng, d, l), 1);
    return p;
}

} // namespace zh
