#pragma once
//
// The derivation module Der_k(A) of A = Q[x1,x2,x3]/(f).
//
// A derivation is stored as its coefficient triple (a1, a2, a3) in normal
// form, D = a1 d/dx1 + a2 d/dx2 + a3 d/dx3, subject to tangency
// D(f) = sum a_i df/dx_i = 0 in A. Two triples give the same derivation of A
// exactly when they agree in A, so normal forms are canonical.
//

#include "action.hpp"
#include "algebra.hpp"
#include "graded.hpp"
#include "qlinalg.hpp"

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqlr {

template <class F>
struct BasicDerivation {
    std::array<BasicPoly<F>, kNumVars> coeffs;

    bool is_zero() const {
        for (const auto& a : coeffs)
            if (!a.is_zero())
                return false;
        return true;
    }

    BasicDerivation& operator+=(const BasicDerivation& o) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            coeffs[i] += o.coeffs[i];
        return *this;
    }
    BasicDerivation& operator-=(const BasicDerivation& o) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            coeffs[i] -= o.coeffs[i];
        return *this;
    }
    BasicDerivation& operator*=(const F& s) {
        for (auto& a : coeffs)
            a *= s;
        return *this;
    }

    friend BasicDerivation operator+(BasicDerivation a, const BasicDerivation& b) { return a += b; }
    friend BasicDerivation operator-(BasicDerivation a, const BasicDerivation& b) { return a -= b; }
    friend BasicDerivation operator*(BasicDerivation a, const F& s) { return a *= s; }
    friend bool operator==(const BasicDerivation& a, const BasicDerivation& b) { return a.coeffs == b.coeffs; }
};

using Derivation = BasicDerivation<Rational>;

struct GradedDerivation {
    Derivation derivation;
    int degree = 0;
    int weight = 0;
};

class NotInSpanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Derivation partial_derivation(std::size_t i, const Poly& coeff = Poly(1)) {
    Derivation d;
    d.coeffs.at(i) = coeff;
    return d;
}

/// E = sum d_i x_i d/dx_i; acts on a homogeneous element of degree e as e.
inline Derivation euler_derivation(const WeightedAlgebra& alg) {
    Derivation e;
    for (std::size_t i = 0; i < kNumVars; ++i)
        e.coeffs[i] = alg.normal_form(Poly::variable(i) * Rational(alg.var_weight(i)));
    return e;
}

/// D(p) = sum a_i dp/dx_i, reduced in A.
template <class F>
BasicPoly<F> apply(const Derivation& d, const BasicPoly<F>& p, const WeightedAlgebra& alg) {
    BasicPoly<F> r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (!d.coeffs[i].is_zero())
            r += mul(d.coeffs[i], p.derivative(i));
    return alg.normal_form(r);
}

/// a * D with coefficients reduced.
inline Derivation scale(const Poly& a, const Derivation& d, const WeightedAlgebra& alg) {
    Derivation r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        r.coeffs[i] = alg.normal_form(a * d.coeffs[i]);
    return r;
}

inline Derivation normalize(Derivation d, const WeightedAlgebra& alg) {
    for (auto& a : d.coeffs)
        a = alg.normal_form(a);
    return d;
}

/// [D, D'] with coefficients D(a'_i) - D'(a_i).
inline Derivation bracket(const Derivation& d1, const Derivation& d2, const WeightedAlgebra& alg) {
    Derivation r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        r.coeffs[i] = apply(d1, d2.coeffs[i], alg) - apply(d2, d1.coeffs[i], alg);
    return r;
}

/// D(f) = 0 in A.
inline bool is_tangent(const Derivation& d, const WeightedAlgebra& alg) {
    Poly s;
    for (std::size_t i = 0; i < kNumVars; ++i)
        s += d.coeffs[i] * alg.partial(i);
    return alg.normal_form(s).is_zero();
}

/// Internal degree e (each a_i homogeneous of degree e + d_i); nullopt if
/// inhomogeneous or zero.
inline std::optional<int> internal_degree(const Derivation& d, const WeightedAlgebra& alg) {
    std::optional<int> e;
    for (std::size_t i = 0; i < kNumVars; ++i)
        for (const auto& [m, c] : d.coeffs[i].terms()) {
            int t = weighted_degree(m, alg.weights()) - alg.var_weight(i);
            if (e && *e != t)
                return std::nullopt;
            e = t;
        }
    return e;
}

/// xi-weight of D (a_i of weight t + m_i); nullopt if mixed or zero.
inline std::optional<int> xi_weight(const Derivation& d, const CyclicAction& act) {
    std::optional<int> w;
    for (std::size_t i = 0; i < kNumVars; ++i)
        for (const auto& [m, c] : d.coeffs[i].terms()) {
            int t = act.residue(act.weight(m) - act.exponents[i]);
            if (w && *w != t)
                return std::nullopt;
            w = t;
        }
    return w;
}

/// The (degree, weight) bihomogeneous components present in D.
inline std::set<std::pair<int, int>> bidegrees(const Derivation& d, const WeightedAlgebra& alg, const CyclicAction& act) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < kNumVars; ++i)
        for (const auto& [m, c] : d.coeffs[i].terms())
            out.emplace(weighted_degree(m, alg.weights()) - alg.var_weight(i),
                        act.residue(act.weight(m) - act.exponents[i]));
    return out;
}

inline Derivation bihomogeneous_part(const Derivation& d, const WeightedAlgebra& alg, const CyclicAction& act, int e,
                                     int t) {
    Derivation r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        for (const auto& [m, c] : d.coeffs[i].terms())
            if (weighted_degree(m, alg.weights()) - alg.var_weight(i) == e &&
                act.residue(act.weight(m) - act.exponents[i]) == act.residue(t))
                r.coeffs[i].add_term(m, c);
    return r;
}

/// Coordinates for coefficient triples of derivations of degree e
/// (and xi-weight t when given).
inline SlotLayout derivation_layout(const WeightedAlgebra& alg, const CyclicAction& act, int e,
                                    std::optional<int> t = std::nullopt) {
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        Slot s{e + alg.var_weight(i), std::nullopt};
        if (t)
            s.weight = act.residue(*t + act.exponents[i]);
        slots.push_back(s);
    }
    return SlotLayout(alg, act, std::move(slots));
}

inline Derivation derivation_from_coordinates(const SlotLayout& layout, const Vector& v) {
    auto values = layout.values(v);
    Derivation d;
    for (std::size_t i = 0; i < kNumVars; ++i)
        d.coeffs[i] = std::move(values[i]);
    return d;
}

inline Vector derivation_coordinates(const SlotLayout& layout, const Derivation& d) {
    return layout.coordinates(d.coeffs);
}

/// Q-basis of the degree-e part of Der_k(A) (restricted to xi-weight t when
/// given): the kernel of (a_1, a_2, a_3) -> sum a_i f_i in A_{e+d}.
inline std::vector<Derivation> der_graded_basis(const WeightedAlgebra& alg, const CyclicAction& act, int e,
                                                std::optional<int> t = std::nullopt) {
    SlotLayout unknowns = derivation_layout(alg, act, e, t);
    if (unknowns.dimension() == 0)
        return {};
    SlotLayout target(alg, act, {Slot{e + alg.degree(), std::nullopt}});
    QMatrix m(target.dimension(), unknowns.dimension());
    for (std::size_t i = 0; i < kNumVars; ++i)
        for (std::size_t k = 0; k < unknowns.monomials(i).size(); ++k) {
            Poly image = alg.normal_form(Poly::monomial(unknowns.monomials(i)[k]) * alg.partial(i));
            add_column_entries(m, unknowns.offset(i) + k, target, 0, image);
        }
    std::vector<Derivation> basis;
    for (const auto& v : kernel_basis(m))
        basis.push_back(derivation_from_coordinates(unknowns, v));
    return basis;
}

inline std::vector<Derivation> der_graded_basis(const WeightedAlgebra& alg, int e) {
    return der_graded_basis(alg, CyclicAction::trivial(), e);
}

/// Span, inside the coordinates of `layout` (degree e, weight t), of all
/// monomial multiples of the given graded derivations.
inline EchelonBasis derivation_span(const std::vector<GradedDerivation>& gens, const WeightedAlgebra& alg,
                                    const CyclicAction& act, const SlotLayout& layout, int e, int t) {
    EchelonBasis span(layout.dimension());
    for (const auto& g : gens)
        for (const auto& mono : alg.graded_basis(e - g.degree).monomials) {
            if (act.weight(mono) != act.residue(t - g.weight))
                continue;
            span.insert(layout.sparse_coordinates(scale(Poly::monomial(mono), g.derivation, alg).coeffs));
        }
    return span;
}

/// Greedy homogeneous generating set of Der_k(A) up to degree `bound`:
/// for each degree (and xi-weight), keeps the basis vectors not already in
/// the A-span of the generators chosen so far.
inline std::vector<GradedDerivation> der_generators(const WeightedAlgebra& alg, const CyclicAction& act, int bound) {
    std::vector<GradedDerivation> gens;
    for (int e = -alg.max_var_weight(); e <= bound; ++e)
        for (int t = 0; t < act.order; ++t) {
            std::vector<Derivation> basis = der_graded_basis(alg, act, e, t);
            if (basis.empty())
                continue;
            SlotLayout layout = derivation_layout(alg, act, e, t);
            EchelonBasis span = derivation_span(gens, alg, act, layout, e, t);
            for (auto& d : basis)
                if (span.insert(layout.sparse_coordinates(d.coeffs)))
                    gens.push_back({std::move(d), e, t});
        }
    return gens;
}

inline std::vector<GradedDerivation> der_generators(const WeightedAlgebra& alg, int bound) {
    return der_generators(alg, CyclicAction::trivial(), bound);
}

/// Linear map (c_i) -> sum c_i G_i on the bihomogeneous piece (e, t), with
/// c_i in A_{e - w_i} of weight t - weight_i.
struct CombinationSystem {
    SlotLayout unknowns; // one slot per generator
    SlotLayout target;   // derivation coordinates of degree e, weight t
    QMatrix matrix;
};

inline CombinationSystem combination_system(const std::vector<GradedDerivation>& gens, const WeightedAlgebra& alg,
                                            const CyclicAction& act, int e, int t) {
    std::vector<Slot> slots;
    for (const auto& g : gens)
        slots.push_back(Slot{e - g.degree, act.residue(t - g.weight)});
    CombinationSystem sys{SlotLayout(alg, act, std::move(slots)), derivation_layout(alg, act, e, t), {}};
    sys.matrix = QMatrix(sys.target.dimension(), sys.unknowns.dimension());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < sys.unknowns.monomials(i).size(); ++k) {
            Derivation image = scale(Poly::monomial(sys.unknowns.monomials(i)[k]), gens[i].derivation, alg);
            for (std::size_t j = 0; j < kNumVars; ++j)
                add_column_entries(sys.matrix, sys.unknowns.offset(i) + k, sys.target, j, image.coeffs[j]);
        }
    return sys;
}

/// Coefficients c_i in A with sum c_i G_i = D. Inhomogeneous D is split into
/// bihomogeneous components. Throws NotInSpanError when D is not in the span
/// (the generator bound was too small).
inline std::vector<Poly> express_in_generators(const Derivation& d, const std::vector<GradedDerivation>& gens,
                                               const WeightedAlgebra& alg, const CyclicAction& act) {
    std::vector<Poly> coeffs(gens.size());
    for (const auto& [e, t] : bidegrees(d, alg, act)) {
        CombinationSystem sys = combination_system(gens, alg, act, e, t);
        Vector rhs = sys.target.coordinates(bihomogeneous_part(d, alg, act, e, t).coeffs);
        auto x = solve(sys.matrix, rhs);
        if (!x)
            throw NotInSpanError("derivation of degree " + std::to_string(e) +
                                 " is not in the span of the generators; raise the presentation bound");
        auto parts = sys.unknowns.values(*x);
        for (std::size_t i = 0; i < gens.size(); ++i)
            coeffs[i] += parts[i];
    }
    return coeffs;
}

/// sum c_i G_i, reduced.
inline Derivation combine(const std::vector<Poly>& coeffs, const std::vector<GradedDerivation>& gens,
                          const WeightedAlgebra& alg) {
    if (coeffs.size() != gens.size())
        throw DimensionError("combine: coefficient count does not match generators");
    Derivation r;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!coeffs[i].is_zero())
            r += scale(coeffs[i], gens[i].derivation, alg);
    return r;
}

} // namespace eqlr
