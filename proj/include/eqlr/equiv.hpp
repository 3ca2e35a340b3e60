#pragma once
//
// Cyclic actions on the Lie-Rinehart complex.
//
// The library works with the xi-weight grading only. The functions taking a
// group element g^k and returning Cyclotomic data apply the action
// elementwise (x_i -> xi^(k m_i) x_i) and exist to cross-check the grading.
//

#include "action.hpp"
#include "complex.hpp"
#include "cyclotomic.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace eqlr {

class GaloisNotAssertedError : public std::runtime_error {
public:
    GaloisNotAssertedError()
        : std::runtime_error("invariant cohomology identifies with the cohomology of the quotient only when the "
                             "invariant ring is asserted Galois (set galois: true)") {}
};

/// The residue t with g * c = xi^t c, or nullopt when c mixes weights.
template <class F>
std::optional<int> xi_weight_of_cochain(const LieRinehartComplex& cx, const BasicCochain<F>& c) {
    std::optional<int> t;
    for (const auto& [e, w] : cx.bidegrees(c)) {
        if (t && *t != w)
            return std::nullopt;
        t = w;
    }
    return t.value_or(0);
}

/// Weight blocks of the degree-e cochain space C^n_e.
inline std::map<int, std::shared_ptr<const CochainSpace>> weight_split(const LieRinehartComplex& cx, int n, int e) {
    std::map<int, std::shared_ptr<const CochainSpace>> blocks;
    for (int t = 0; t < cx.action().order; ++t)
        blocks.emplace(t, cx.cochain_space(n, e, t));
    return blocks;
}

/// Projection onto the invariants: the weight-0 component.
template <class F>
BasicCochain<F> reynolds(const LieRinehartComplex& cx, const BasicCochain<F>& c) {
    const auto& gens = cx.wedges(c.n).generators;
    BasicCochain<F> r{c.n, std::vector<BasicPoly<F>>(c.values.size())};
    for (std::size_t w = 0; w < c.values.size(); ++w)
        for (const auto& [m, q] : c.values[w].terms())
            if (cx.action().residue(cx.action().weight(m) - gens[w].weight) == 0)
                r.values[w].add_term(m, q);
    return r;
}

// --- elementwise action over Q(xi) ---

/// g^k * p: x^a -> xi^(k wt(a)) x^a.
template <class F>
BasicPoly<Cyclotomic> act_on_poly(const CyclicAction& act, int k, const BasicPoly<F>& p) {
    BasicPoly<Cyclotomic> r;
    for (const auto& [m, c] : p.terms()) {
        Cyclotomic z = Cyclotomic::root_power(act.order, static_cast<long>(k) * act.weight(m));
        if constexpr (std::is_same_v<F, Cyclotomic>)
            r.add_term(m, z * c);
        else
            r.add_term(m, z * Cyclotomic(c));
    }
    return r;
}

/// g^k * D = g D g^{-1}: coefficient a_i -> xi^(-k m_i) (g^k * a_i).
inline BasicDerivation<Cyclotomic> act_on_derivation(const CyclicAction& act, int k, const Derivation& d) {
    BasicDerivation<Cyclotomic> r;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        r.coeffs[i] = act_on_poly(act, k, d.coeffs[i]);
        r.coeffs[i] *= Cyclotomic::root_power(act.order, -static_cast<long>(k) * act.exponents[i]);
    }
    return r;
}

/// Splits a derivation over Q(xi) into rational parts: D = sum_j xi^j D_j.
inline std::vector<Derivation> rational_parts(const BasicDerivation<Cyclotomic>& d) {
    std::size_t size = 1;
    for (const auto& a : d.coeffs)
        for (const auto& [m, c] : a.terms())
            size = std::max(size, c.basis_size());
    std::vector<Derivation> parts(size);
    for (std::size_t i = 0; i < kNumVars; ++i)
        for (const auto& [m, c] : d.coeffs[i].terms())
            for (std::size_t j = 0; j < size; ++j)
                if (!c.coefficient(j).is_zero())
                    parts[j].coeffs[i].add_term(m, c.coefficient(j));
    return parts;
}

/// Coefficients over Q(xi) of a derivation over Q(xi) in the generators.
inline std::vector<BasicPoly<Cyclotomic>> express_in_generators(const BasicDerivation<Cyclotomic>& d,
                                                                const LieRinehartComplex& cx) {
    const int m = cx.action().order;
    std::vector<BasicPoly<Cyclotomic>> out(cx.generators().size());
    auto parts = rational_parts(d);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].is_zero())
            continue;
        auto c = express_in_generators(parts[j], cx.generators(), cx.algebra(), cx.action());
        Cyclotomic z = Cyclotomic::root_power(m, static_cast<long>(j));
        for (std::size_t l = 0; l < c.size(); ++l)
            out[l] += lift<Cyclotomic>(c[l]) * z;
    }
    return out;
}

/// (g^k * phi)(W) = g^k (phi(g^{-k} * W)), computed elementwise: each
/// generator is transformed, re-expanded in the generators and fed to phi.
template <class F>
BasicCochain<Cyclotomic> act_on_cochain(const LieRinehartComplex& cx, int k, const BasicCochain<F>& c) {
    BasicCochain<Cyclotomic> lifted;
    if constexpr (std::is_same_v<F, Cyclotomic>)
        lifted = c;
    else
        lifted = lift<Cyclotomic>(c);
    std::vector<std::vector<BasicPoly<Cyclotomic>>> moved;
    for (const auto& g : cx.generators())
        moved.push_back(express_in_generators(act_on_derivation(cx.action(), -k, g.derivation), cx));
    const auto& gens = cx.wedges(c.n).generators;
    BasicCochain<Cyclotomic> r{c.n, std::vector<BasicPoly<Cyclotomic>>(gens.size())};
    for (std::size_t w = 0; w < gens.size(); ++w) {
        std::vector<std::vector<BasicPoly<Cyclotomic>>> args;
        for (std::size_t i : gens[w].indices)
            args.push_back(moved[i]);
        r.values[w] = act_on_poly(cx.action(), k, cx.evaluate_expanded(lifted, args));
    }
    return r;
}

/// The same action read off from weights: a term x^a on W is scaled by
/// xi^(k (wt(a) - wt(W))).
template <class F>
BasicCochain<Cyclotomic> act_by_weight(const LieRinehartComplex& cx, int k, const BasicCochain<F>& c) {
    const auto& gens = cx.wedges(c.n).generators;
    const CyclicAction& act = cx.action();
    BasicCochain<Cyclotomic> r{c.n, std::vector<BasicPoly<Cyclotomic>>(c.values.size())};
    for (std::size_t w = 0; w < c.values.size(); ++w)
        for (const auto& [m, q] : c.values[w].terms()) {
            Cyclotomic z = Cyclotomic::root_power(act.order, static_cast<long>(k) * (act.weight(m) - gens[w].weight));
            if constexpr (std::is_same_v<F, Cyclotomic>)
                r.values[w].add_term(m, z * q);
            else
                r.values[w].add_term(m, z * Cyclotomic(q));
        }
    return r;
}

/// (1/m) sum_k g^k * c, elementwise.
template <class F>
BasicCochain<Cyclotomic> average_cochain(const LieRinehartComplex& cx, const BasicCochain<F>& c) {
    const int m = cx.action().order;
    BasicCochain<Cyclotomic> sum{c.n, std::vector<BasicPoly<Cyclotomic>>(c.values.size())};
    for (int k = 0; k < m; ++k)
        sum += act_on_cochain(cx, k, c);
    sum *= Cyclotomic(Rational(1, m));
    return sum;
}

/// Invariant part of H^n at degree e. Requires the Galois assertion: only
/// then does it compute the cohomology of the invariant ring.
inline CohomologyResult invariant_cohomology(const LieRinehartComplex& cx, int n, int e, bool galois_asserted) {
    if (!galois_asserted)
        throw GaloisNotAssertedError();
    return cx.cohomology(n, e, 0);
}

} // namespace eqlr
