#pragma once
//
// Text form of polynomials in x1, x2, x3.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := ('+' | '-') factor | power
//   power  := atom ('^' integer)?
//   atom   := integer | x1 | x2 | x3 | '(' expr ')'
//
// Whitespace is insignificant and multiplication must be written out
// ("2*x1", never "2x1"). Division is only allowed by nonzero constants,
// which is how rational coefficients are written ("3/2*x1").
//

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqlr {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position), detail_(message) {}

    std::size_t position() const { return position_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse() {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "empty expression");
        Poly p = expr();
        skip_space();
        if (!at_end())
            unexpected();
        return p;
    }

private:
    static constexpr unsigned kMaxExponent = 10000;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void unexpected() {
        if (at_end())
            throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(')
            throw ParseError(pos_, std::string("unexpected '") + c + "' (implicit multiplication is not allowed)");
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (accept('*')) {
                p = p * factor();
            } else if (accept('/')) {
                skip_space();
                std::size_t where = pos_;
                Poly d = factor();
                if (d.is_zero())
                    throw ParseError(where, "division by zero");
                if (d.size() != 1 || d.terms().begin()->first != Monomial{})
                    throw ParseError(where, "division is only allowed by constants");
                p *= d.terms().begin()->second.inverse();
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        if (accept('-'))
            return -factor();
        if (accept('+'))
            return factor();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t where = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(where, "exponent must be a non-negative integer");
            std::string digits = read_digits();
            if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
                throw ParseError(where, "exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    Poly atom() {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly(Rational::parse(read_digits()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t where = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                name += text_[pos_++];
            for (std::size_t i = 0; i < kNumVars; ++i)
                if (name == "x" + std::to_string(i + 1))
                    return Poly::variable(i);
            throw ParseError(where, "unknown identifier '" + name + "'");
        }
        if (c == '(') {
            std::size_t open = pos_++;
            Poly p = expr();
            if (!accept(')'))
                throw ParseError(at_end() ? open : pos_, "missing ')'");
            return p;
        }
        unexpected();
    }

    std::string read_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            d += text_[pos_++];
        return d;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

inline std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (m[i] > 1)
            s += "^" + std::to_string(m[i]);
    }
    return s;
}

/// Canonical text: terms by descending total degree, then descending lex.
inline std::string to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        std::string mono = monomial_to_string(m);
        if (mono.empty())
            os << mag;
        else if (mag.is_one())
            os << mono;
        else
            os << mag << "*" << mono;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

} // namespace eqlr
