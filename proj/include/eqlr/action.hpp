#pragma once
//
// Diagonal cyclic group actions of type (m; m1, m2, m3):
//   g * x_i = xi^(m_i) x_i,  xi a primitive m-th root of unity.
//
// The root of unity is never materialized here. The action is a Z/m
// grading ("xi-weight"): x^alpha has weight sum alpha_i m_i, the partial
// derivative d/dx_i has weight -m_i, wedges add weights and a Hom value
// has the weight of the value minus the weight of the source.
//

#include "algebra.hpp"
#include "qlinalg.hpp"

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace eqlr {

inline int mod_residue(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

struct CyclicAction {
    int order = 1;
    std::array<int, kNumVars> exponents{0, 0, 0};

    static CyclicAction trivial() { return {}; }

    static CyclicAction make(int m, std::array<int, kNumVars> exps) {
        if (m < 1)
            throw ValidationError("group order must be at least 1");
        CyclicAction a;
        a.order = m;
        for (std::size_t i = 0; i < kNumVars; ++i)
            a.exponents[i] = mod_residue(exps[i], m);
        return a;
    }

    bool is_trivial() const { return order == 1; }

    int residue(long a) const { return mod_residue(a, order); }

    /// xi-weight of x^alpha.
    int weight(const Monomial& m) const {
        long s = 0;
        for (std::size_t i = 0; i < kNumVars; ++i)
            s += static_cast<long>(m[i]) * exponents[i];
        return residue(s);
    }

    /// m1 + m2 + m3 - m (not reduced).
    int canonical_character() const { return exponents[0] + exponents[1] + exponents[2] - order; }
};

inline bool operator==(const CyclicAction& a, const CyclicAction& b) {
    return a.order == b.order && a.exponents == b.exponents;
}

/// xi-weight of p when all its terms share one.
template <class F>
std::optional<int> homogeneous_weight(const BasicPoly<F>& p, const CyclicAction& act) {
    std::optional<int> w;
    for (const auto& [m, c] : p.terms()) {
        int t = act.weight(m);
        if (w && *w != t)
            return std::nullopt;
        w = t;
    }
    return w;
}

/// Terms of p with xi-weight t.
template <class F>
BasicPoly<F> weight_part(const BasicPoly<F>& p, const CyclicAction& act, int t) {
    BasicPoly<F> r;
    for (const auto& [m, c] : p.terms())
        if (act.weight(m) == act.residue(t))
            r.add_term(m, c);
    return r;
}

struct ActionCheck {
    bool compatible = true;
    /// sum alpha_i m_i == m exactly for every alpha in the support of f
    bool strict_equality = true;
    std::vector<Monomial> offending;
    /// sum alpha_i m_i for each support monomial, in support order
    std::vector<long> support_values;
    int canonical_character = 0;
    int canonical_character_residue = 0;
    std::vector<std::string> warnings;
};

/// Checks that the action is well defined on A, i.e. g * f = f.
inline ActionCheck check_action(const WeightedAlgebra& alg, const CyclicAction& act) {
    ActionCheck r;
    for (const auto& [m, c] : alg.f().terms()) {
        long s = 0;
        for (std::size_t i = 0; i < kNumVars; ++i)
            s += static_cast<long>(m[i]) * act.exponents[i];
        r.support_values.push_back(s);
        if (act.residue(s) != 0) {
            r.compatible = false;
            r.offending.push_back(m);
        }
        if (s != act.order)
            r.strict_equality = false;
    }
    r.canonical_character = act.canonical_character();
    r.canonical_character_residue = act.residue(r.canonical_character);
    if (r.compatible && !r.strict_equality && !act.is_trivial())
        r.warnings.push_back("action is compatible only modulo m: sum alpha_i m_i = m does not hold for every "
                             "support monomial of f");
    return r;
}

class ActionError : public ValidationError {
public:
    ActionError(const std::string& what, std::vector<Monomial> offending)
        : ValidationError(what), offending_(std::move(offending)) {}
    const std::vector<Monomial>& offending() const { return offending_; }

private:
    std::vector<Monomial> offending_;
};

/// Throws ActionError listing the offending support exponents.
inline ActionCheck require_compatible(const WeightedAlgebra& alg, const CyclicAction& act) {
    ActionCheck r = check_action(alg, act);
    if (!r.compatible) {
        std::ostringstream os;
        os << "action of type (" << act.order << ";" << act.exponents[0] << "," << act.exponents[1] << ","
           << act.exponents[2] << ") does not preserve f; offending exponents:";
        for (const auto& m : r.offending)
            os << " (" << m[0] << "," << m[1] << "," << m[2] << ")";
        throw ActionError(os.str(), r.offending);
    }
    return r;
}

struct PseudoReflectionReport {
    struct Element {
        int power = 0;
        std::size_t fixed_dimension = 0;
        std::size_t codimension = 0;
        bool pseudo_reflection = false;
    };
    std::size_t dimension = 0;
    int order = 1;
    std::vector<Element> elements; // nontrivial elements g^1 .. g^(order-1)
    bool has_pseudo_reflections = false;
};

/// Diagonal action diag(xi^e_1, ..., xi^e_r) of Z/m on k^r.
inline PseudoReflectionReport pseudo_reflection_check(int order, const std::vector<int>& exponents) {
    if (order < 1)
        throw ValidationError("group order must be at least 1");
    PseudoReflectionReport r;
    r.dimension = exponents.size();
    r.order = order;
    for (int k = 1; k < order; ++k) {
        PseudoReflectionReport::Element e;
        e.power = k;
        for (int ei : exponents)
            if (mod_residue(static_cast<long>(k) * ei, order) == 0)
                ++e.fixed_dimension;
        e.codimension = r.dimension - e.fixed_dimension;
        e.pseudo_reflection = e.codimension == 1;
        r.has_pseudo_reflections = r.has_pseudo_reflections || e.pseudo_reflection;
        r.elements.push_back(e);
    }
    return r;
}

inline PseudoReflectionReport pseudo_reflection_check(const CyclicAction& act) {
    return pseudo_reflection_check(act.order, {act.exponents.begin(), act.exponents.end()});
}

/// Cyclic group generated by a rational matrix of finite order (at most
/// max_order). Fixed spaces are kernels of g^k - 1, computed exactly.
inline PseudoReflectionReport pseudo_reflection_check(const std::vector<Vector>& generator, int max_order = 64) {
    const std::size_t n = generator.size();
    auto multiply = [n](const std::vector<Vector>& a, const std::vector<Vector>& b) {
        std::vector<Vector> c(n, Vector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    auto is_identity = [n](const std::vector<Vector>& a) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[i][j] != Rational(i == j ? 1 : 0))
                    return false;
        return true;
    };
    for (const auto& row : generator)
        if (row.size() != n)
            throw DimensionError("pseudo_reflection_check: matrix must be square");

    std::vector<std::vector<Vector>> powers;
    std::vector<Vector> g = generator;
    int order = 1;
    while (!is_identity(g)) {
        powers.push_back(g);
        if (++order > max_order)
            throw ValidationError("matrix does not have finite order <= " + std::to_string(max_order));
        g = multiply(g, generator);
    }
    PseudoReflectionReport r;
    r.dimension = n;
    r.order = order;
    for (std::size_t k = 0; k < powers.size(); ++k) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, powers[k][i][j] - Rational(i == j ? 1 : 0));
        PseudoReflectionReport::Element e;
        e.power = static_cast<int>(k) + 1;
        e.fixed_dimension = kernel_basis(m).size();
        e.codimension = n - e.fixed_dimension;
        e.pseudo_reflection = e.codimension == 1;
        r.has_pseudo_reflections = r.has_pseudo_reflections || e.pseudo_reflection;
        r.elements.push_back(e);
    }
    return r;
}

} // namespace eqlr
