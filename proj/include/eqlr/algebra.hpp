#pragma once
//
// The quasi-homogeneous surface algebra A = Q[x1,x2,x3]/(f).
//
// Monomial order: weighted degree, refined by lex with x1 > x2 > x3. Since f
// is weighted homogeneous, its leading monomial is simply the lex-largest
// monomial of its support, and {f} is a Groebner basis of (f), so division by
// f gives canonical normal forms.
//

#include "poly.hpp"
#include "poly_io.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlr {

struct WeightSystem {
    std::array<int, kNumVars> var_weights{1, 1, 1};
    int degree = 1;
};

inline int weighted_degree(const Monomial& m, const WeightSystem& w) {
    int s = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
        s += m[i] * w.var_weights[i];
    return s;
}

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when f is not weighted homogeneous; carries the offending exponents.
class HomogeneityError : public ValidationError {
public:
    HomogeneityError(const std::string& what, std::vector<Monomial> offending)
        : ValidationError(what), offending_(std::move(offending)) {}
    const std::vector<Monomial>& offending() const { return offending_; }

private:
    std::vector<Monomial> offending_;
};

/// Exponent vectors alpha in the support of f with weighted degree != d.
inline std::vector<Monomial> homogeneity_defects(const Poly& f, const WeightSystem& w) {
    std::vector<Monomial> bad;
    for (const auto& [m, c] : f.terms())
        if (weighted_degree(m, w) != w.degree)
            bad.push_back(m);
    return bad;
}

/// Monomial basis of one graded piece A_e together with a position index.
struct DegreeBasis {
    int degree = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;

    std::size_t size() const { return monomials.size(); }
};

class WeightedAlgebra {
public:
    WeightedAlgebra(Poly f, WeightSystem w) : f_(std::move(f)), weights_(w), cache_(std::make_shared<Cache>()) {
        for (int wi : weights_.var_weights)
            if (wi < 1)
                throw ValidationError("variable weights must be positive");
        if (weights_.degree < 1)
            throw ValidationError("total weight must be positive");
        if (f_.is_zero())
            throw ValidationError("f must be nonzero");
        auto bad = homogeneity_defects(f_, weights_);
        if (!bad.empty()) {
            std::ostringstream os;
            os << "f is not weighted homogeneous of degree " << weights_.degree << "; offending exponents:";
            for (const auto& m : bad)
                os << " (" << m[0] << "," << m[1] << "," << m[2] << ")";
            throw HomogeneityError(os.str(), std::move(bad));
        }
        leading_ = f_.lex_leading();
        leading_coeff_ = f_.terms().rbegin()->second;
        for (std::size_t i = 0; i < kNumVars; ++i)
            partials_[i] = f_.derivative(i);
    }

    const Poly& f() const { return f_; }
    const WeightSystem& weights() const { return weights_; }
    int degree() const { return weights_.degree; }
    int var_weight(std::size_t i) const { return weights_.var_weights.at(i); }
    const Monomial& leading_monomial() const { return leading_; }
    /// df/dx_{i+1}, as a polynomial (not reduced).
    const Poly& partial(std::size_t i) const { return partials_.at(i); }

    int min_var_weight() const { return *std::min_element(weights_.var_weights.begin(), weights_.var_weights.end()); }
    int max_var_weight() const { return *std::max_element(weights_.var_weights.begin(), weights_.var_weights.end()); }

    /// d - d1 - d2 - d3
    int canonical_shift() const {
        int s = weights_.degree;
        for (int wi : weights_.var_weights)
            s -= wi;
        return s;
    }

    /// Remainder of p on division by f.
    template <class F>
    BasicPoly<F> normal_form(BasicPoly<F> p) const {
        const F inv_lead = F(leading_coeff_.inverse());
        auto& terms = p.mutable_terms();
        auto it = terms.end();
        while (it != terms.begin()) {
            --it;
            if (!mono_divides(leading_, it->first))
                continue;
            const Monomial cur = it->first;
            const Monomial shift = mono_div(cur, leading_);
            const F c = it->second * inv_lead;
            // Every other monomial of f is lex-smaller than the leading one,
            // so new terms land strictly below cur.
            for (const auto& [m, a] : f_.terms()) {
                if (m == leading_)
                    continue;
                p.add_term(mono_mul(m, shift), -(c * F(a)));
            }
            terms.erase(cur);
            it = terms.lower_bound(cur);
        }
        return p;
    }

    bool is_reduced_monomial(const Monomial& m) const { return !mono_divides(leading_, m); }

    /// Basis of A_e: monomials of weighted degree e not divisible by LM(f).
    const DegreeBasis& graded_basis(int e) const {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->bases.find(e);
        if (it != cache_->bases.end())
            return it->second;
        DegreeBasis b;
        b.degree = e;
        if (e >= 0) {
            const auto& w = weights_.var_weights;
            for (int a0 = e / w[0]; a0 >= 0; --a0)
                for (int a1 = (e - a0 * w[0]) / w[1]; a1 >= 0; --a1) {
                    int rest = e - a0 * w[0] - a1 * w[1];
                    if (rest % w[2] != 0)
                        continue;
                    Monomial m{a0, a1, rest / w[2]};
                    if (is_reduced_monomial(m))
                        b.monomials.push_back(m);
                }
            for (std::size_t i = 0; i < b.monomials.size(); ++i)
                b.index.emplace(b.monomials[i], i);
        }
        return cache_->bases.emplace(e, std::move(b)).first->second;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<int, DegreeBasis> bases;
    };

    Poly f_;
    WeightSystem weights_;
    Monomial leading_{};
    Rational leading_coeff_;
    std::array<Poly, kNumVars> partials_;
    std::shared_ptr<Cache> cache_;
};

template <class F>
BasicPoly<F> normal_form(const BasicPoly<F>& p, const WeightedAlgebra& alg) {
    return alg.normal_form(p);
}

inline std::vector<Monomial> graded_basis(const WeightedAlgebra& alg, int e) { return alg.graded_basis(e).monomials; }

/// Weighted degree of a nonzero polynomial if all its terms share one.
template <class F>
std::optional<int> homogeneous_degree(const BasicPoly<F>& p, const WeightSystem& w) {
    std::optional<int> deg;
    for (const auto& [m, c] : p.terms()) {
        int d = weighted_degree(m, w);
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

/// Component of p of weighted degree e.
template <class F>
BasicPoly<F> degree_part(const BasicPoly<F>& p, const WeightSystem& w, int e) {
    BasicPoly<F> r;
    for (const auto& [m, c] : p.terms())
        if (weighted_degree(m, w) == e)
            r.add_term(m, c);
    return r;
}

} // namespace eqlr
