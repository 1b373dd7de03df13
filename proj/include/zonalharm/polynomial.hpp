#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zh {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require_same_dimension(std::size_t a, std::size_t b, const char* what)
{
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

/// Exponent vector of a monomial x_1^{e_1} ... x_d^{e_d}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

    static Monomial zero(int dimension) { return Monomial(std::vector<unsigned>(static_cast<std::size_t>(dimension), 0u)); }

    int dimension() const { return static_cast<int>(exponents_.size()); }
    unsigned degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0u); }
    unsigned operator[](std::size_t i) const { return exponents_[i]; }
    unsigned& operator[](std::size_t i) { return exponents_[i]; }
    std::span<const unsigned> exponents() const { return exponents_; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exponents_;
};

/// Graded lexicographic order, largest first: iteration visits x1^2, x1*x2, x2^2.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        const unsigned da = a.degree();
        const unsigned db = b.degree();
        if (da != db) return da > db;
        const auto ea = a.exponents();
        const auto eb = b.exponents();
        return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
    }
};

/// Homogeneous polynomial of fixed degree in d variables with exact rational coefficients.
/// No zero coefficients are stored; every term has degree exactly `degree()`.
class HomogeneousPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    HomogeneousPolynomial(int dimension, int degree) : dimension_(dimension), degree_(degree)
    {
        if (dimension < 1) throw std::invalid_argument("polynomial dimension must be positive");
        if (degree < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
    }

    HomogeneousPolynomial(int dimension, int degree, const TermMap& terms) : HomogeneousPolynomial(dimension, degree)
    {
        for (const auto& [mono, coeff] : terms) {
            add_term(mono, coeff);
        }
    }

    static HomogeneousPolynomial constant(int dimension, const Rational& c)
    {
        HomogeneousPolynomial p(dimension, 0);
        p.add_term(Monomial::zero(dimension), c);
        return p;
    }

    static HomogeneousPolynomial monomial(int dimension, const Monomial& m, const Rational& c = 1)
    {
        HomogeneousPolynomial p(dimension, static_cast<int>(m.degree()));
        p.add_term(m, c);
        return p;
    }

    /// x_i with a 0-based index.
    static HomogeneousPolynomial variable(int dimension, int index)
    {
        Monomial m = Monomial::zero(dimension);
        m[static_cast<std::size_t>(index)] = 1;
        return monomial(dimension, m);
    }

    /// r^2 = x_1^2 + ... + x_d^2.
    static HomogeneousPolynomial r_squared(int dimension)
    {
        HomogeneousPolynomial p(dimension, 2);
        for (int i = 0; i < dimension; ++i) {
            Monomial m = Monomial::zero(dimension);
            m[static_cast<std::size_t>(i)] = 2;
            p.add_term(m, 1);
        }
        return p;
    }

    int dimension() const { return dimension_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other)
    {
        check_compatible(other, "polynomial addition");
        for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
        return *this;
    }

    HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& other)
    {
        check_compatible(other, "polynomial subtraction");
        for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
        return *this;
    }

    HomogeneousPolynomial& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [mono, coeff] : terms_) coeff *= c;
        return *this;
    }

    friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a += b; }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a -= b; }
    friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Rational& c) { return a *= c; }
    friend HomogeneousPolynomial operator*(const Rational& c, HomogeneousPolynomial a) { return a *= c; }
    friend HomogeneousPolynomial operator-(HomogeneousPolynomial a) { return a *= Rational(-1); }

    friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b)
    {
        require_same_dimension(static_cast<std::size_t>(a.dimension_), static_cast<std::size_t>(b.dimension_),
                               "polynomial product");
        HomogeneousPolynomial out(a.dimension_, a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < m.exponents().size(); ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b)
    {
        if (a.dimension_ != b.dimension_) return false;
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Adds c * m; drops the entry when it cancels.
    void add_term(const Monomial& m, const Rational& c)
    {
        if (m.dimension() != dimension_) {
            throw DimensionMismatch("monomial has " + std::to_string(m.dimension()) + " exponents, polynomial has dimension " +
                                    std::to_string(dimension_));
        }
        if (static_cast<int>(m.degree()) != degree_) {
            throw std::invalid_argument("monomial of degree " + std::to_string(m.degree()) +
                                        " in homogeneous polynomial of degree " + std::to_string(degree_));
        }
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void check_compatible(const HomogeneousPolynomial& other, const char* what) const
    {
        require_same_dimension(static_cast<std::size_t>(dimension_), static_cast<std::size_t>(other.dimension_), what);
        if (degree_ != other.degree_ && !other.is_zero()) {
            throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(degree_) + " vs " +
                                        std::to_string(other.degree_));
        }
    }

    int dimension_;
    int degree_;
    TermMap terms_;
};

/// Laplacian; degree drops by two (the zero polynomial of degree 0 when degree < 2).
inline HomogeneousPolynomial laplacian(const HomogeneousPolynomial& p)
{
    HomogeneousPolynomial out(p.dimension(), std::max(p.degree() - 2, 0));
    if (p.degree() < 2) return out;
    for (const auto& [mono, coeff] : p.terms()) {
        for (std::size_t i = 0; i < mono.exponents().size(); ++i) {
            const unsigned e = mono[i];
            if (e < 2) continue;
            Monomial m = mono;
            m[i] = e - 2;
            out.add_term(m, coeff * Integer(e * (e - 1)));
        }
    }
    return out;
}

/// Multiplication by r^2 = sum x_i^2.
inline HomogeneousPolynomial mul_r2(const HomogeneousPolynomial& p)
{
    HomogeneousPolynomial out(p.dimension(), p.degree() + 2);
    for (const auto& [mono, coeff] : p.terms()) {
        for (std::size_t i = 0; i < mono.exponents().size(); ++i) {
            Monomial m = mono;
            m[i] += 2;
            out.add_term(m, coeff);
        }
    }
    return out;
}

inline HomogeneousPolynomial mul_r2_power(HomogeneousPolynomial p, int power)
{
    for (int i = 0; i < power; ++i) p = mul_r2(p);
    return p;
}

/// Relabels variables: x_i -> x_{perm[i]}.
inline HomogeneousPolynomial permute_variables(const HomogeneousPolynomial& p, std::span<const int> perm)
{
    require_same_dimension(perm.size(), static_cast<std::size_t>(p.dimension()), "permute_variables");
    HomogeneousPolynomial out(p.dimension(), p.degree());
    for (const auto& [mono, coeff] : p.terms()) {
        Monomial m = Monomial::zero(p.dimension());
        for (std::size_t i = 0; i < perm.size(); ++i) m[static_cast<std::size_t>(perm[i])] = mono[i];
        out.add_term(m, coeff);
    }
    return out;
}

/// Floating-point evaluation. T may be float-like or complex.
template <typename T>
T evaluate(const HomogeneousPolynomial& p, std::span<const T> x)
{
    require_same_dimension(x.size(), static_cast<std::size_t>(p.dimension()), "evaluate");
    const std::size_t deg = static_cast<std::size_t>(p.degree());
    // powers[i][e] = x_i^e
    std::vector<std::vector<T>> powers(x.size(), std::vector<T>(deg + 1, T(1)));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t e = 1; e <= deg; ++e) powers[i][e] = powers[i][e - 1] * x[i];
    }
    T sum(0);
    for (const auto& [mono, coeff] : p.terms()) {
        T term(to_double(coeff));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (mono[i] != 0) term *= powers[i][mono[i]];
        }
        sum += term;
    }
    return sum;
}

inline double evaluate(const HomogeneousPolynomial& p, std::span<const double> x) { return evaluate<double>(p, x); }

inline double evaluate(const HomogeneousPolynomial& p, const std::vector<double>& x)
{
    return evaluate<double>(p, std::span<const double>(x));
}

/// Point of the unit sphere S^{d-1}.
class UnitVector {
public:
    static constexpr double tolerance = 1e-14;

    explicit UnitVector(std::vector<double> components) : components_(std::move(components))
    {
        if (components_.empty()) throw std::invalid_argument("unit vector needs at least one component");
        const double n = norm(components_);
        if (!(std::abs(n - 1.0) <= tolerance)) {
            throw std::invalid_argument("vector norm " + std::to_string(n) + " is not 1");
        }
    }

    static UnitVector normalized(std::vector<double> v)
    {
        const double n = norm(v);
        if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero vector");
        for (double& c : v) c /= n;
        return UnitVector(std::move(v));
    }

    static UnitVector axis(int dimension, int index)
    {
        std::vector<double> v(static_cast<std::size_t>(dimension), 0.0);
        v.at(static_cast<std::size_t>(index)) = 1.0;
        return UnitVector(std::move(v));
    }

    int dimension() const { return static_cast<int>(components_.size()); }
    std::span<const double> components() const { return components_; }
    double operator[](std::size_t i) const { return components_[i]; }

    double dot(const UnitVector& other) const
    {
        require_same_dimension(components_.size(), other.components_.size(), "unit vector inner product");
        double s = 0.0;
        for (std::size_t i = 0; i < components_.size(); ++i) s += components_[i] * other.components_[i];
        return std::clamp(s, -1.0, 1.0);
    }

private:
    static double norm(const std::vector<double>& v)
    {
        long double s = 0;
        for (double c : v) s += static_cast<long double>(c) * c;
        return static_cast<double>(std::sqrt(s));
    }

    std::vector<double> components_;
};

/// Integral of xi^e over S^{d-1} against the normalized surface measure (total mass 1):
/// zero unless every exponent is even, otherwise prod (e_i - 1)!! / (d (d+2) ... (d + |e| - 2)).
inline Rational sphere_monomial_integral(std::span<const unsigned> exponents)
{
    const auto d = static_cast<unsigned>(exponents.size());
    unsigned total = 0;
    Integer num = 1;
    for (unsigned e : exponents) {
        if (e % 2 != 0) return 0;
        num *= odd_double_factorial_below(e);
        total += e;
    }
    Integer den = 1;
    for (unsigned j = 0; j < total / 2; ++j) den *= d + 2 * j;
    return make_rational(num, den);
}

inline Rational sphere_monomial_integral(const Monomial& m) { return sphere_monomial_integral(m.exponents()); }

/// <P|Q> = integral of P Q over the sphere, normalized measure. Exact.
inline Rational sphere_inner_product(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q)
{
    require_same_dimension(static_cast<std::size_t>(p.dimension()), static_cast<std::size_t>(q.dimension()),
                           "sphere_inner_product");
    if (p.is_zero() || q.is_zero()) return 0;
    if ((p.degree() + q.degree()) % 2 != 0) return 0;

    const auto d = static_cast<std::size_t>(p.dimension());
    // Only pairs whose exponents agree in parity coordinatewise contribute.
    auto parity_key = [d](const Monomial& m) {
        std::vector<std::uint8_t> key(d);
        for (std::size_t i = 0; i < d; ++i) key[i] = static_cast<std::uint8_t>(m[i] & 1u);
        return key;
    };
    std::map<std::vector<std::uint8_t>, std::vector<const HomogeneousPolynomial::TermMap::value_type*>> q_classes;
    for (const auto& term : q.terms()) q_classes[parity_key(term.first)].push_back(&term);

    const auto max_exp = static_cast<unsigned>(p.degree() + q.degree());
    std::vector<Integer> dfact(max_exp + 1);
    for (unsigned e = 0; e <= max_exp; e += 2) dfact[e] = odd_double_factorial_below(e);

    Rational sum = 0;
    Integer weight;
    Rational partial;
    for (const auto& [ma, ca] : p.terms()) {
        auto it = q_classes.find(parity_key(ma));
        if (it == q_classes.end()) continue;
        partial = 0;
        for (const auto* term : it->second) {
            const Monomial& mb = term->first;
            weight = 1;
            for (std::size_t i = 0; i < d; ++i) weight *= dfact[ma[i] + mb[i]];
            partial += term->second * weight;
        }
        sum += ca * partial;
    }
    // All products share total degree, hence one common denominator.
    Integer den = 1;
    for (unsigned j = 0; j < max_exp / 2; ++j) den *= static_cast<unsigned>(d) + 2 * j;
    return sum / den;
}

} // namespace zh
