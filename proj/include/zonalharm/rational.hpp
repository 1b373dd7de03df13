#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zh {

/// Exact rational coefficient; GMP keeps it canonical (gcd = 1, denominator > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1)
{
    return make_rational(Integer(num), Integer(den));
}

/// Parses `p/q` or an integer, optional leading sign.
inline Rational parse_rational(std::string_view text)
{
    auto digits_ok = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Rational q = make_rational(Integer(std::string(num)), Integer(std::string(den)));
    return negative ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

/// Nearest double; mpq_get_d truncates, so round through a long double first.
inline double to_double(const Rational& q)
{
    if (q == 0) return 0.0;
    // mpf with 128 bits is plenty to round correctly to 53 bits in practice.
    mpf_class f(q, 128);
    long exp = 0;
    const double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    // mpf_get_d_2exp truncates too; correct the last bit using the residual.
    const double approx = std::ldexp(mant, static_cast<int>(exp));
    mpf_class residual = f - mpf_class(approx, 128);
    return approx + residual.get_d();
}

/// Rising factorial a (a+1) ... (a+n-1), exact.
inline Rational rising(const Rational& a, unsigned n)
{
    Rational out = 1;
    Rational term = a;
    for (unsigned i = 0; i < n; ++i) {
        out *= term;
        term += 1;
    }
    return out;
}

inline Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/// (n-1)!! for the sphere integrals, with (-1)!! = 1.
inline Integer odd_double_factorial_below(unsigned n)
{
    if (n == 0) return 1;
    Integer out;
    mpz_2fac_ui(out.get_mpz_t(), n - 1);
    return out;
}

inline Integer pow2(unsigned n)
{
    Integer out = 1;
    out <<= n;
    return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace zh
