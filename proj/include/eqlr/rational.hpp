#pragma once
//
// Exact rational numbers (arbitrary precision, always in lowest terms).
//

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eqlr {

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : value_(static_cast<long>(n)) {}

    Rational(long num, long den) : value_(num, den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "n" or "n/d" with optional sign.
    static Rational parse(std::string_view text) {
        mpq_class v;
        if (v.set_str(std::string(text), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        if (v.get_den() == 0)
            throw std::domain_error("Rational: zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / value_);
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::string to_string() const { return value_.get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class value_{0};
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }

} // namespace eqlr
