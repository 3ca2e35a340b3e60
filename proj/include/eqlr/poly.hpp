#pragma once
//
// Polynomials in three variables with coefficients in a field F.
//
// F is Rational for all of the actual cohomology computations; the
// cyclotomic field appears only where the group action is applied
// elementwise. F must provide +, -, *, construction from Rational and
// is_zero().
//

#include "rational.hpp"

#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace eqlr {

inline constexpr std::size_t kNumVars = 3;

/// Exponent vector (alpha_1, alpha_2, alpha_3).
using Monomial = std::array<int, kNumVars>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (d[i] > m[i])
            return false;
    return true;
}

/// m / d, assuming d | m.
inline Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        r[i] = m[i] - d[i];
    return r;
}

inline int total_degree(const Monomial& m) {
    int s = 0;
    for (int a : m)
        s += a;
    return s;
}

inline Monomial unit_monomial(std::size_t var) {
    Monomial m{};
    m.at(var) = 1;
    return m;
}

template <class F>
class BasicPoly {
public:
    using Coefficient = F;
    // Ascending lexicographic order on exponent vectors (x1 > x2 > x3).
    using Terms = std::map<Monomial, F>;

    BasicPoly() = default;
    BasicPoly(const F& c) { add_term(Monomial{}, c); }
    template <std::integral I>
    BasicPoly(I c) : BasicPoly(F(Rational(c))) {}

    static BasicPoly monomial(const Monomial& m, const F& c = F(Rational(1))) {
        BasicPoly p;
        p.add_term(m, c);
        return p;
    }

    static BasicPoly variable(std::size_t i) { return monomial(unit_monomial(i)); }

    const Terms& terms() const { return terms_; }
    Terms& mutable_terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    F coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? F(Rational{}) : it->second;
    }

    void add_term(const Monomial& m, const F& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void erase(const Monomial& m) { terms_.erase(m); }

    /// Lexicographically largest monomial (the polynomial must be nonzero).
    const Monomial& lex_leading() const {
        if (terms_.empty())
            throw std::domain_error("lex_leading of zero polynomial");
        return terms_.rbegin()->first;
    }

    BasicPoly operator-() const {
        BasicPoly r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }

    BasicPoly& operator*=(const F& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const F& s) { return a *= s; }
    friend BasicPoly operator*(const F& s, BasicPoly a) { return a *= s; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        if (a.terms_.size() != b.terms_.size())
            return false;
        auto ib = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (m != ib->first || !(c == ib->second))
                return false;
            ++ib;
        }
        return true;
    }

    /// Formal partial derivative with respect to x_{var+1}.
    BasicPoly derivative(std::size_t var) const {
        BasicPoly r;
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0)
                continue;
            Monomial n = m;
            n[var] -= 1;
            r.add_term(n, c * F(Rational(m[var])));
        }
        return r;
    }

    BasicPoly pow(unsigned e) const {
        BasicPoly r(F(Rational(1)));
        BasicPoly base = *this;
        while (e) {
            if (e & 1u)
                r = r * base;
            e >>= 1u;
            if (e)
                base = base * base;
        }
        return r;
    }

private:
    Terms terms_;
};

using Poly = BasicPoly<Rational>;

/// Reinterprets a rational polynomial over a larger coefficient field.
template <class F>
BasicPoly<F> lift(const Poly& p) {
    if constexpr (std::is_same_v<F, Rational>) {
        return p;
    } else {
        BasicPoly<F> r;
        for (const auto& [m, c] : p.terms())
            r.add_term(m, F(c));
        return r;
    }
}

/// Product of a rational polynomial and an F-polynomial.
template <class F>
BasicPoly<F> mul(const Poly& a, const BasicPoly<F>& b) {
    if constexpr (std::is_same_v<F, Rational>) {
        return a * b;
    } else {
        BasicPoly<F> r;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                r.add_term(mono_mul(ma, mb), F(ca) * cb);
        return r;
    }
}

} // namespace eqlr
