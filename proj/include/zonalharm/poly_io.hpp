#pragma once

#include "polynomial.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zh {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

    HomogeneousPolynomial parse()
    {
        std::vector<std::pair<Monomial, Rational>> terms;
        std::optional<unsigned> degree;
        std::size_t degree_pos = 0;

        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = next() == '-';
            skip_ws();
        }
        while (true) {
            const std::size_t term_pos = pos_;
            auto [mono, coeff] = parse_term();
            if (negative) coeff = -coeff;
            if (coeff != 0) {
                if (degree && *degree != mono.degree()) {
                    throw ParseError(term_pos, "term of degree " + std::to_string(mono.degree()) +
                                                   " in polynomial of degree " + std::to_string(*degree) +
                                                   " (first fixed at position " + std::to_string(degree_pos) + ")");
                }
                if (!degree) {
                    degree = mono.degree();
                    degree_pos = term_pos;
                }
                terms.emplace_back(std::move(mono), std::move(coeff));
            }
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError(pos_, std::string("expected '+' or '-', found '") + op + "'");
            negative = next() == '-';
            skip_ws();
        }
        HomogeneousPolynomial p(dimension_, static_cast<int>(degree.value_or(0)));
        for (const auto& [m, c] : terms) p.add_term(m, c);
        return p;
    }

private:
    std::pair<Monomial, Rational> parse_term()
    {
        Monomial mono = Monomial::zero(dimension_);
        Rational coeff = 1;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            skip_ws();
            if (peek() != '*') return {mono, coeff};
            next();
            skip_ws();
        }
        while (true) {
            if (peek() != 'x') {
                throw ParseError(pos_, have_factor ? "expected variable after '*'" : "expected coefficient or variable");
            }
            next();
            const std::size_t index_pos = pos_;
            const unsigned index = parse_unsigned("variable index");
            if (index < 1 || static_cast<int>(index) > dimension_) {
                throw ParseError(index_pos, "variable x" + std::to_string(index) + " outside dimension " +
                                                std::to_string(dimension_));
            }
            unsigned exponent = 1;
            skip_ws();
            if (peek() == '^') {
                next();
                skip_ws();
                exponent = parse_unsigned("exponent");
            }
            mono[index - 1] += exponent;
            have_factor = true;
            skip_ws();
            if (peek() != '*') break;
            next();
            skip_ws();
        }
        return {mono, coeff};
    }

    Rational parse_coefficient()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) next();
        if (peek() == '/') {
            next();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected denominator digits");
            while (std::isdigit(static_cast<unsigned char>(peek()))) next();
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            throw ParseError(start, e.what());
        }
    }

    unsigned parse_unsigned(const char* what)
    {
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<unsigned long>(next() - '0');
            if (value > 100000) throw ParseError(start, std::string(what) + " too large");
        }
        if (pos_ == start) throw ParseError(start, std::string("expected ") + what);
        return static_cast<unsigned>(value);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char next() { return text_[pos_++]; }

    std::string_view text_;
    int dimension_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses e.g. `3/2*x1^2*x2 - x3^3`. Variables are 1-based; all terms must share one degree.
inline HomogeneousPolynomial parse_polynomial(std::string_view text, int dimension)
{
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    return detail::PolyParser(text, dimension).parse();
}

/// Canonical text form (graded lex, largest monomial first).
inline std::string to_text(const HomogeneousPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(coeff);
        const bool constant = mono.degree() == 0;
        bool need_star = false;
        if (mag != 1 || constant) {
            out += to_string(mag);
            need_star = true;
        }
        for (int i = 0; i < mono.dimension(); ++i) {
            const unsigned e = mono[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (need_star) out += "*";
            out += "x" + std::to_string(i + 1);
            if (e > 1) out += "^" + std::to_string(e);
            need_star = true;
        }
    }
    return out;
}

inline nlohmann::json to_json(const HomogeneousPolynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        nlohmann::json e = nlohmann::json::array();
        for (unsigned x : mono.exponents()) e.push_back(x);
        terms.push_back({{"e", e}, {"c", to_string(coeff)}});
    }
    nlohmann::json out;
    out["d"] = p.dimension();
    out["l"] = p.degree();
    out["terms"] = terms;
    return out;
}

inline HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j)
{
    const int d = j.at("d").get<int>();
    const int l = j.at("l").get<int>();
    HomogeneousPolynomial p(d, l);
    for (const auto& term : j.at("terms")) {
        Monomial m(term.at("e").get<std::vector<unsigned>>());
        p.add_term(m, parse_rational(term.at("c").get<std::string>()));
    }
    return p;
}

} // namespace zh
