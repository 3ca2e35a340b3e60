#pragma once
//
// Graded presentations of Der_k(A) and of its exterior powers, and the
// degreewise carrier spaces Hom_A(wedge^n Der_k(A), A).
//
// A presentation is a list of bihomogeneous generators G_i (internal degree,
// xi-weight) and homogeneous relations r with sum r_i G_i = 0. The n-th
// exterior power of F/R is wedge^n F / (R wedge wedge^(n-1) F), so its
// relations are the r wedge G_J for every relation r and (n-1)-subset J.
//

#include "action.hpp"
#include "algebra.hpp"
#include "deriv.hpp"
#include "graded.hpp"
#include "qlinalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace eqlr {

struct GradedRelation {
    std::vector<Poly> coeffs;
    int degree = 0;
    int weight = 0;
};

/// Generous default: generators of Der_k(A) for a surface hypersurface sit
/// below d, and the last syzygies below 2d - d1 - d2 - d3.
inline int default_presentation_bound(const WeightedAlgebra& alg) { return 2 * alg.degree(); }

struct DerPresentation {
    WeightedAlgebra algebra;
    CyclicAction action;
    int bound = 0;
    std::vector<GradedDerivation> generators;
    std::vector<GradedRelation> relations;
    /// brackets[i][j] = coefficients of [G_i, G_j] in the generators (i < j).
    std::vector<std::vector<std::vector<Poly>>> brackets;

    std::size_t rank() const { return generators.size(); }

    const std::vector<Poly>& bracket_coeffs(std::size_t i, std::size_t j) const {
        if (i >= j)
            throw std::invalid_argument("bracket_coeffs: expected i < j");
        return brackets.at(i).at(j);
    }
};

/// Multiplies a coefficient vector by a monomial, reducing in A.
inline std::vector<Poly> scale_vector(const Monomial& mono, const std::vector<Poly>& v, const WeightedAlgebra& alg) {
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& p : v)
        out.push_back(alg.normal_form(Poly::monomial(mono) * p));
    return out;
}

/// Relations among the generators up to degree `bound`, extracted greedily:
/// a degreewise kernel vector is kept only if it is not an A-combination of
/// relations already found.
inline std::vector<GradedRelation> harvest_relations(const std::vector<GradedDerivation>& gens,
                                                     const WeightedAlgebra& alg, const CyclicAction& act, int bound) {
    std::vector<GradedRelation> rels;
    if (gens.empty())
        return rels;
    int lowest = gens.front().degree;
    for (const auto& g : gens)
        lowest = std::min(lowest, g.degree);
    for (int e = lowest; e <= bound; ++e)
        for (int t = 0; t < act.order; ++t) {
            CombinationSystem sys = combination_system(gens, alg, act, e, t);
            if (sys.unknowns.dimension() == 0)
                continue;
            auto kernel = kernel_basis(sys.matrix);
            if (kernel.empty())
                continue;
            EchelonBasis span(sys.unknowns.dimension());
            for (const auto& r : rels)
                for (const auto& mono : alg.graded_basis(e - r.degree).monomials) {
                    if (act.weight(mono) != act.residue(t - r.weight))
                        continue;
                    span.insert(sys.unknowns.sparse_coordinates(scale_vector(mono, r.coeffs, alg)));
                }
            for (const auto& v : kernel)
                if (span.insert(to_sparse(v)))
                    rels.push_back({sys.unknowns.values(v), e, t});
        }
    return rels;
}

/// Generators, relations and bracket structure constants of Der_k(A), all
/// computed up to degree `bound`.
inline DerPresentation build_presentation(const WeightedAlgebra& alg, const CyclicAction& act, int bound) {
    require_compatible(alg, act);
    DerPresentation p{alg, act, bound, der_generators(alg, act, bound), {}, {}};
    p.relations = harvest_relations(p.generators, alg, act, bound);
    const std::size_t k = p.generators.size();
    p.brackets.assign(k, std::vector<std::vector<Poly>>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Derivation b = bracket(p.generators[i].derivation, p.generators[j].derivation, alg);
            p.brackets[i][j] = express_in_generators(b, p.generators, alg, act);
        }
    return p;
}

inline DerPresentation build_presentation(const WeightedAlgebra& alg, int bound) {
    return build_presentation(alg, CyclicAction::trivial(), bound);
}

struct WedgeGenerator {
    std::vector<std::size_t> indices; // strictly increasing
    int degree = 0;
    int weight = 0;
};

struct WedgePresentation {
    int n = 0;
    std::vector<WedgeGenerator> generators;
    std::vector<GradedRelation> relations;
    std::map<std::vector<std::size_t>, std::size_t> index;

    std::optional<std::size_t> find(const std::vector<std::size_t>& indices) const {
        auto it = index.find(indices);
        if (it == index.end())
            return std::nullopt;
        return it->second;
    }
};

namespace detail {

inline void subsets(std::size_t k, std::size_t n, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < k; ++i) {
        cur.push_back(i);
        subsets(k, n, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Increasing n-subsets of {0, ..., k-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t k, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n > k)
        return out;
    std::vector<std::size_t> cur;
    detail::subsets(k, n, 0, cur, out);
    return out;
}

/// Inserts i into the increasing tuple `rest`. Returns the sorted tuple and
/// the sign (-1)^position of moving i from the front into place, or nullopt
/// if i already occurs.
inline std::optional<std::pair<std::vector<std::size_t>, int>> wedge_insert(std::size_t i,
                                                                            const std::vector<std::size_t>& rest) {
    std::vector<std::size_t> out;
    out.reserve(rest.size() + 1);
    std::size_t pos = 0;
    while (pos < rest.size() && rest[pos] < i)
        ++pos;
    if (pos < rest.size() && rest[pos] == i)
        return std::nullopt;
    out.insert(out.end(), rest.begin(), rest.begin() + static_cast<long>(pos));
    out.push_back(i);
    out.insert(out.end(), rest.begin() + static_cast<long>(pos), rest.end());
    return std::make_pair(std::move(out), pos % 2 == 0 ? 1 : -1);
}

inline WedgePresentation wedge_presentation(const DerPresentation& p, int n) {
    WedgePresentation w;
    w.n = n;
    if (n < 0)
        throw std::invalid_argument("wedge_presentation: negative exterior power");
    const CyclicAction& act = p.action;
    for (auto& tuple : increasing_tuples(p.rank(), static_cast<std::size_t>(n))) {
        WedgeGenerator g{tuple, 0, 0};
        for (std::size_t i : tuple) {
            g.degree += p.generators[i].degree;
            g.weight = act.residue(g.weight + p.generators[i].weight);
        }
        w.index.emplace(tuple, w.generators.size());
        w.generators.push_back(std::move(g));
    }
    if (n == 0 || w.generators.empty())
        return w;
    for (const auto& r : p.relations)
        for (const auto& rest : increasing_tuples(p.rank(), static_cast<std::size_t>(n - 1))) {
            GradedRelation wr{std::vector<Poly>(w.generators.size()), r.degree, r.weight};
            for (std::size_t j : rest) {
                wr.degree += p.generators[j].degree;
                wr.weight = act.residue(wr.weight + p.generators[j].weight);
            }
            bool nonzero = false;
            for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
                if (r.coeffs[i].is_zero())
                    continue;
                auto ins = wedge_insert(i, rest);
                if (!ins)
                    continue;
                Poly c = r.coeffs[i];
                if (ins->second < 0)
                    c = -c;
                wr.coeffs[w.index.at(ins->first)] += c;
                nonzero = true;
            }
            if (nonzero)
                w.relations.push_back(std::move(wr));
        }
    return w;
}

/// Degree-e homogeneous elements of Hom_A(wedge^n Der, A) (xi-weight t when
/// given), as a kernel basis in slot coordinates: one value in A_{w_W + e}
/// per wedge generator W, annihilating every relation.
struct CochainSpace {
    int n = 0;
    int degree = 0;
    std::optional<int> weight;
    SlotLayout layout;
    std::vector<Vector> basis;

    std::size_t dimension() const { return basis.size(); }
};

inline SlotLayout cochain_layout(const WedgePresentation& w, const WeightedAlgebra& alg, const CyclicAction& act, int e,
                                 std::optional<int> t) {
    std::vector<Slot> slots;
    slots.reserve(w.generators.size());
    for (const auto& g : w.generators) {
        Slot s{g.degree + e, std::nullopt};
        if (t)
            s.weight = act.residue(*t + g.weight);
        slots.push_back(s);
    }
    return SlotLayout(alg, act, std::move(slots));
}

/// Stacked relation constraints sum_W rho_W phi(W) = 0 on the slots of `layout`.
inline QMatrix relation_constraints(const WedgePresentation& w, const WeightedAlgebra& alg, const CyclicAction& act,
                                    const SlotLayout& layout, int e, std::optional<int> t) {
    std::vector<Slot> row_slots;
    for (const auto& r : w.relations) {
        Slot s{r.degree + e, std::nullopt};
        if (t)
            s.weight = act.residue(*t + r.weight);
        row_slots.push_back(s);
    }
    SlotLayout rows(alg, act, std::move(row_slots));
    QMatrix m(rows.dimension(), layout.dimension());
    for (std::size_t r = 0; r < w.relations.size(); ++r) {
        if (rows.monomials(r).empty())
            continue;
        const auto& rel = w.relations[r];
        for (std::size_t s = 0; s < layout.slot_count(); ++s) {
            if (rel.coeffs[s].is_zero())
                continue;
            for (std::size_t k = 0; k < layout.monomials(s).size(); ++k) {
                Poly image = alg.normal_form(rel.coeffs[s] * Poly::monomial(layout.monomials(s)[k]));
                add_column_entries(m, layout.offset(s) + k, rows, r, image);
            }
        }
    }
    return m;
}

inline CochainSpace cochain_space(const WedgePresentation& w, const WeightedAlgebra& alg, const CyclicAction& act, int e,
                                  std::optional<int> t = std::nullopt) {
    CochainSpace c{w.n, e, t, cochain_layout(w, alg, act, e, t), {}};
    if (c.layout.dimension() == 0)
        return c;
    c.basis = kernel_basis(relation_constraints(w, alg, act, c.layout, e, t));
    return c;
}

} // namespace eqlr
