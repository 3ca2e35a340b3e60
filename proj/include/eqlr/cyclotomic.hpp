#pragma once
//
// Elements of the cyclotomic field Q(xi), xi a primitive m-th root of unity,
// stored as rational coefficients on 1, xi, ..., xi^(phi(m)-1).
//
// The grading machinery never needs these; they exist so that the group
// action can be applied elementwise (x_i -> xi^(m_i) x_i) and compared
// exactly against the weight bookkeeping.
//

#include "rational.hpp"

#include <algorithm>
#include <concepts>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlr {

namespace detail {

// Integer polynomials as coefficient vectors, lowest degree first.
inline std::vector<Rational> poly_divide_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational c = num[k + den.size() - 1] / den.back();
        quot[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= c * den[j];
    }
    return quot;
}

inline const std::vector<Rational>& cyclotomic_polynomial(int m) {
    static std::mutex mutex;
    static std::map<int, std::vector<Rational>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end())
        return it->second;
    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Rational> p(static_cast<std::size_t>(m) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        auto hit = cache.find(d);
        // divisors are computed before their multiples, see cyclotomic()
        if (hit == cache.end())
            throw std::logic_error("cyclotomic_polynomial: divisor not cached");
        p = poly_divide_exact(p, hit->second);
    }
    return cache.emplace(m, std::move(p)).first->second;
}

inline const std::vector<Rational>& cyclotomic(int m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic: order must be positive");
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            cyclotomic_polynomial(d);
    return cyclotomic_polynomial(m);
}

} // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : coeffs_{Rational{}} {}
    Cyclotomic(const Rational& q) : coeffs_{q} {}
    template <std::integral I>
    Cyclotomic(I n) : coeffs_{Rational(n)} {}

    /// xi^k in Q(xi_m).
    static Cyclotomic root_power(int m, long k) {
        if (m < 1)
            throw std::invalid_argument("Cyclotomic: order must be positive");
        long r = ((k % m) + m) % m;
        std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
        c[static_cast<std::size_t>(r)] = 1;
        return Cyclotomic(m, std::move(c));
    }

    /// 0 for a plain rational not yet tied to a field.
    int order() const { return order_; }

    /// Coefficient of xi^j in the canonical basis.
    Rational coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational{}; }
    std::size_t basis_size() const { return coeffs_.size(); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            if (!coeffs_[j].is_zero())
                return false;
        return true;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        int m = join(o);
        coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            coeffs_[j] += o.coeffs_[j];
        order_ = m;
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        int m = join(o);
        std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        *this = Cyclotomic(m, std::move(prod));
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j].is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + coeffs_[j].to_string() + ")";
            if (j > 0)
                s += "*xi^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

private:
    Cyclotomic(int m, std::vector<Rational> c) : order_(m), coeffs_(std::move(c)) { reduce(); }

    int join(const Cyclotomic& o) const {
        if (order_ != 0 && o.order_ != 0 && order_ != o.order_)
            throw std::invalid_argument("Cyclotomic: mixing roots of unity of different orders");
        return order_ != 0 ? order_ : o.order_;
    }

    void reduce() {
        if (order_ == 0)
            return;
        const auto& phi = detail::cyclotomic(order_);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = coeffs_.size(); k-- > deg;) {
            Rational c = coeffs_[k];
            if (c.is_zero())
                continue;
            // phi is monic
            for (std::size_t j = 0; j <= deg; ++j)
                coeffs_[k - deg + j] -= c * phi[j];
        }
        if (coeffs_.size() > deg)
            coeffs_.resize(std::max<std::size_t>(deg, 1));
    }

    int order_ = 0;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

} // namespace eqlr
