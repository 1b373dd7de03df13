#pragma once

#include "polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zh {

/// alpha = (d - 2) / 2 for the ambient dimension d >= 3; an integer or half-odd integer >= 1/2.
class Alpha {
public:
    explicit Alpha(const Rational& value) : value_(value)
    {
        if (value_ < Rational(1, 2)) throw std::invalid_argument("alpha must be at least 1/2 (d >= 3)");
        if (!is_integer(2 * value_)) throw std::invalid_argument("alpha must be an integer or half-odd integer");
    }

    static Alpha from_dimension(int d)
    {
        if (d < 3) throw std::invalid_argument("dimension must be at least 3, got " + std::to_string(d));
        return Alpha(make_rational(d - 2, 2));
    }

    const Rational& value() const { return value_; }
    double to_double() const { return zh::to_double(value_); }
    int dimension() const { return static_cast<int>(Rational(2 * value_ + 2).get_num().get_si()); }
    bool is_half_odd() const { return !is_integer(value_); }

    friend bool operator==(const Alpha&, const Alpha&) = default;

private:
    Rational value_;
};

/// e^l_j(k) = (-1)^j (alpha+l-2k) Gamma(alpha+l-2k-j) / (4^{k+j} k! j! Gamma(alpha+l+1-k)).
/// The Gamma ratio is 1 / prod_{i=0}^{k+j} (alpha+l-2k-j+i).
inline Rational harmonic_coefficient(const Alpha& alpha, int l, int k, int j)
{
    if (l < 0 || k < 0 || j < 0 || k > l / 2 || j > l / 2 - k) {
        throw std::out_of_range("harmonic_coefficient: index out of range (l=" + std::to_string(l) + ", k=" +
                                std::to_string(k) + ", j=" + std::to_string(j) + ")");
    }
    const Rational& a = alpha.value();
    const Rational base = a + (l - 2 * k - j);
    Rational value = (a + (l - 2 * k)) / rising(base, static_cast<unsigned>(k + j + 1));
    value /= pow2(static_cast<unsigned>(2 * (k + j)));
    value /= factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(j));
    return j % 2 == 0 ? value : Rational(-value);
}

struct HarmonicComponent {
    int k;
    HomogeneousPolynomial h; ///< h_{l-2k}(P), degree l - 2k
};

struct HarmonicDecomposition {
    int source_degree;
    std::vector<HarmonicComponent> components; ///< k = 0 .. floor(l/2), in order

    /// sum_k r^{2k} h_{l-2k}
    HomogeneousPolynomial reconstruct() const
    {
        HomogeneousPolynomial out(components.front().h.dimension(), source_degree);
        for (const auto& c : components) out += mul_r2_power(c.h, c.k);
        return out;
    }
};

/// Delta^0 P, Delta^1 P, ..., Delta^{floor(l/2)} P.
inline std::vector<HomogeneousPolynomial> laplacian_powers(const HomogeneousPolynomial& p)
{
    std::vector<HomogeneousPolynomial> powers{p};
    for (int m = 1; m <= p.degree() / 2; ++m) powers.push_back(laplacian(powers.back()));
    return powers;
}

namespace detail {

inline HomogeneousPolynomial harmonic_component(const Alpha& alpha, const std::vector<HomogeneousPolynomial>& lap, int l,
                                                int k)
{
    const int d = lap.front().dimension();
    const int top = l / 2 - k;
    HomogeneousPolynomial h(d, l - 2 * k - 2 * top);
    // Horner in r^2: sum_j e_j r^{2j} Delta^{k+j} P
    for (int j = top; j >= 0; --j) {
        if (j != top) h = mul_r2(h);
        h += harmonic_coefficient(alpha, l, k, j) * lap[static_cast<std::size_t>(k + j)];
    }
    return h;
}

inline void check_decomposable(const HomogeneousPolynomial& p)
{
    if (p.dimension() < 3) throw std::invalid_argument("canonical decomposition needs d >= 3");
}

} // namespace detail

/// Canonical decomposition P = sum_k r^{2k} h_{l-2k}(P) with every h harmonic.
inline HarmonicDecomposition decompose(const HomogeneousPolynomial& p)
{
    detail::check_decomposable(p);
    const Alpha alpha = Alpha::from_dimension(p.dimension());
    const int l = p.degree();
    const auto lap = laplacian_powers(p);
    HarmonicDecomposition out{l, {}};
    for (int k = 0; k <= l / 2; ++k) out.components.push_back({k, detail::harmonic_component(alpha, lap, l, k)});
    return out;
}

/// r^{2k} h_{l-2k}(P), the projection of P onto r^{2k} H^{l-2k}.
inline HomogeneousPolynomial project(const HomogeneousPolynomial& p, int k)
{
    detail::check_decomposable(p);
    if (k < 0 || k > p.degree() / 2) {
        throw std::out_of_range("project: k=" + std::to_string(k) + " outside 0.." + std::to_string(p.degree() / 2));
    }
    const auto lap = laplacian_powers(p);
    return mul_r2_power(detail::harmonic_component(Alpha::from_dimension(p.dimension()), lap, p.degree(), k), k);
}

/// dim H^l = 2(l+alpha) Gamma(2alpha+l) / (Gamma(l+1) Gamma(2alpha+1)).
inline Integer harmonic_dim(const Alpha& alpha, int l)
{
    if (l < 0) throw std::invalid_argument("harmonic_dim: negative degree");
    if (l == 0) return 1;
    const Rational two_alpha = 2 * alpha.value();
    Rational value = 2 * (alpha.value() + l) * rising(two_alpha + 1, static_cast<unsigned>(l - 1));
    value /= factorial(static_cast<unsigned>(l));
    if (!is_integer(value)) throw std::logic_error("harmonic_dim: non-integer dimension " + to_string(value));
    return value.get_num();
}

} // namespace zh
