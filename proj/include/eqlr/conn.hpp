#pragma once
//
// Connections on rank-one modules over A, presented as homogeneous ideals
// M = (u_1, ..., u_r) of A.
//
// A connection is stored by its values on generators,
//   nabla_{G_i}(u_j) = sum_l Gamma^(i)_{lj} u_l,
// and extended by A-linearity in D and the Leibniz rule in M. Because A is
// a domain and M sits inside A, every operator nabla_D(u_j) is an element
// of A and endomorphisms of M are multiplications by elements of A.
//

#include "complex.hpp"
#include "cyclotomic.hpp"
#include "equiv.hpp"
#include "graded.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlr {

class ConnectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModuleSyzygy {
    std::vector<Poly> coeffs; // sum_j coeffs[j] u_j = 0
    int degree = 0;
};

struct RankOneModule {
    std::vector<Poly> generators;
    std::vector<int> degrees;
    std::optional<std::vector<int>> weights; // set when M is equivariant
    std::vector<ModuleSyzygy> syzygies;
    int syzygy_bound = 0;

    std::size_t size() const { return generators.size(); }
    bool equivariant() const { return weights.has_value(); }
};

inline int default_syzygy_bound(const WeightedAlgebra& alg, const std::vector<int>& degrees) {
    int top = 0;
    for (int d : degrees)
        top = std::max(top, d);
    return 2 * top + 2 * alg.degree();
}

/// Syzygies of (u_1..u_r) up to degree `bound`, harvested greedily as for
/// Der relations.
inline std::vector<ModuleSyzygy> module_syzygies(const std::vector<Poly>& u, const std::vector<int>& degrees,
                                                 const WeightedAlgebra& alg, int bound) {
    std::vector<ModuleSyzygy> out;
    if (u.empty())
        return out;
    const CyclicAction none = CyclicAction::trivial();
    int lowest = *std::min_element(degrees.begin(), degrees.end());
    for (int e = lowest; e <= bound; ++e) {
        std::vector<Slot> slots;
        for (int dj : degrees)
            slots.push_back({e - dj, std::nullopt});
        SlotLayout unknowns(alg, none, slots);
        if (unknowns.dimension() == 0)
            continue;
        SlotLayout target(alg, none, {Slot{e, std::nullopt}});
        QMatrix m(target.dimension(), unknowns.dimension());
        for (std::size_t j = 0; j < u.size(); ++j)
            for (std::size_t k = 0; k < unknowns.monomials(j).size(); ++k)
                add_column_entries(m, unknowns.offset(j) + k, target, 0,
                                   alg.normal_form(Poly::monomial(unknowns.monomials(j)[k]) * u[j]));
        auto kernel = kernel_basis(m);
        if (kernel.empty())
            continue;
        EchelonBasis span(unknowns.dimension());
        for (const auto& s : out)
            for (const auto& mono : alg.graded_basis(e - s.degree).monomials)
                span.insert(unknowns.sparse_coordinates(scale_vector(mono, s.coeffs, alg)));
        for (const auto& v : kernel)
            if (span.insert(to_sparse(v)))
                out.push_back({unknowns.values(v), e});
    }
    return out;
}

/// Validates generators (nonzero, homogeneous, xi-homogeneous when an
/// action is given) and computes syzygies.
inline RankOneModule make_module(std::vector<Poly> u, const WeightedAlgebra& alg,
                                 const std::optional<CyclicAction>& act = std::nullopt,
                                 std::optional<int> bound = std::nullopt) {
    RankOneModule M;
    if (u.empty())
        throw ValidationError("module needs at least one generator");
    for (std::size_t j = 0; j < u.size(); ++j) {
        Poly p = alg.normal_form(u[j]);
        if (p.is_zero())
            throw ValidationError("module generator " + std::to_string(j) + " is zero in A");
        auto d = homogeneous_degree(p, alg.weights());
        if (!d)
            throw ValidationError("module generator " + std::to_string(j) + " is not weighted homogeneous");
        M.degrees.push_back(*d);
        M.generators.push_back(std::move(p));
    }
    if (act) {
        std::vector<int> w;
        for (std::size_t j = 0; j < M.size(); ++j) {
            auto t = homogeneous_weight(M.generators[j], *act);
            if (!t)
                throw ValidationError("module generator " + std::to_string(j) + " is not xi-homogeneous");
            w.push_back(*t);
        }
        M.weights = std::move(w);
    }
    M.syzygy_bound = bound.value_or(default_syzygy_bound(alg, M.degrees));
    M.syzygies = module_syzygies(M.generators, M.degrees, alg, M.syzygy_bound);
    return M;
}

/// The free module A with basis 1.
inline RankOneModule unit_module(const WeightedAlgebra& alg, const std::optional<CyclicAction>& act = std::nullopt) {
    return make_module({Poly(1)}, alg, act, 0);
}

template <class F>
struct BasicConnection {
    /// gamma[i][l][j] = Gamma^(i)_{lj}
    std::vector<std::vector<std::vector<BasicPoly<F>>>> gamma;

    static BasicConnection zero(std::size_t der_rank, std::size_t module_rank) {
        BasicConnection c;
        c.gamma.assign(der_rank, std::vector<std::vector<BasicPoly<F>>>(module_rank,
                                                                          std::vector<BasicPoly<F>>(module_rank)));
        return c;
    }

    friend bool operator==(const BasicConnection& a, const BasicConnection& b) { return a.gamma == b.gamma; }
};

using Connection = BasicConnection<Rational>;

/// On M = A: nabla_D(a) = D(a) + omega(D) a. omega = 0 is the trivial
/// connection.
inline Connection twisted_connection(const LieRinehartComplex& cx, const Cochain& omega) {
    if (omega.n != 1)
        throw DimensionError("twisted_connection: omega must be a 1-cochain");
    Connection c = Connection::zero(cx.generators().size(), 1);
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        c.gamma[i][0][0] = omega.values.at(i);
    return c;
}

inline Connection trivial_connection(const LieRinehartComplex& cx) {
    return twisted_connection(cx, cx.zero_cochain(1));
}

/// v_ij = nabla_{G_i}(u_j) as an element of A.
template <class F>
std::vector<std::vector<BasicPoly<F>>> connection_values(const RankOneModule& M, const BasicConnection<F>& c,
                                                         const WeightedAlgebra& alg) {
    std::vector<std::vector<BasicPoly<F>>> v(c.gamma.size(), std::vector<BasicPoly<F>>(M.size()));
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        for (std::size_t j = 0; j < M.size(); ++j) {
            BasicPoly<F> s;
            for (std::size_t l = 0; l < M.size(); ++l)
                s += mul(M.generators[l], c.gamma[i][l][j]);
            v[i][j] = alg.normal_form(s);
        }
    return v;
}

/// nabla_{G_i}(m) for m = sum_j a_j u_j.
template <class F>
BasicPoly<F> connection_apply(const RankOneModule& M, const BasicConnection<F>& c, const LieRinehartComplex& cx,
                              std::size_t i, const std::vector<BasicPoly<F>>& a) {
    const auto& alg = cx.algebra();
    auto v = connection_values(M, c, alg);
    BasicPoly<F> r;
    for (std::size_t j = 0; j < M.size(); ++j) {
        r += mul(M.generators[j], apply(cx.generators()[i].derivation, a[j], alg));
        r += a[j] * v[i][j];
    }
    return alg.normal_form(r);
}

struct ConnectionViolation {
    enum class Kind { ModuleRelation, DerRelation, Shape };
    Kind kind = Kind::Shape;
    std::size_t relation = 0;  // index of the syzygy or Der relation
    std::size_t generator = 0; // Der generator (module relations) or module generator (Der relations)
    Poly residual;
    std::string message;
};

struct ConnectionReport {
    bool ok = true;
    std::vector<ConnectionViolation> violations;
};

inline std::string describe(const ConnectionViolation& v) {
    std::ostringstream os;
    switch (v.kind) {
    case ConnectionViolation::Kind::ModuleRelation:
        os << "Leibniz rule fails on module syzygy " << v.relation << " for Der generator " << v.generator;
        break;
    case ConnectionViolation::Kind::DerRelation:
        os << "A-linearity fails on Der relation " << v.relation << " at module generator " << v.generator;
        break;
    case ConnectionViolation::Kind::Shape:
        return v.message;
    }
    os << " (residual " << to_string(v.residual) << ")";
    return os.str();
}

inline ConnectionReport verify_connection(const RankOneModule& M, const Connection& c, const LieRinehartComplex& cx) {
    ConnectionReport r;
    const auto& alg = cx.algebra();
    const auto& gens = cx.generators();
    if (c.gamma.size() != gens.size()) {
        r.ok = false;
        r.violations.push_back({ConnectionViolation::Kind::Shape, 0, 0, {},
                                "connection lists " + std::to_string(c.gamma.size()) + " Der generators, expected " +
                                    std::to_string(gens.size())});
        return r;
    }
    for (const auto& gi : c.gamma) {
        bool bad = gi.size() != M.size();
        for (const auto& row : gi)
            bad = bad || row.size() != M.size();
        if (bad) {
            r.ok = false;
            r.violations.push_back(
                {ConnectionViolation::Kind::Shape, 0, 0, {}, "connection matrix does not match the module rank"});
            return r;
        }
    }
    auto v = connection_values(M, c, alg);
    for (std::size_t s = 0; s < M.syzygies.size(); ++s)
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Poly res = connection_apply(M, c, cx, i, M.syzygies[s].coeffs);
            if (!res.is_zero()) {
                r.ok = false;
                r.violations.push_back({ConnectionViolation::Kind::ModuleRelation, s, i, res, {}});
            }
        }
    const auto& rels = cx.presentation().relations;
    for (std::size_t q = 0; q < rels.size(); ++q)
        for (std::size_t j = 0; j < M.size(); ++j) {
            Poly s;
            for (std::size_t i = 0; i < gens.size(); ++i)
                s += rels[q].coeffs[i] * v[i][j];
            s = alg.normal_form(s);
            if (!s.is_zero()) {
                r.ok = false;
                r.violations.push_back({ConnectionViolation::Kind::DerRelation, q, j, s, {}});
            }
        }
    return r;
}

/// R(G_a ^ G_b)(u_k) for every 2-wedge generator and module generator:
/// nabla_a(nabla_b u_k) - nabla_b(nabla_a u_k) - nabla_[G_a,G_b](u_k).
template <class F>
std::vector<std::vector<BasicPoly<F>>> curvature_values(const RankOneModule& M, const BasicConnection<F>& c,
                                                        const LieRinehartComplex& cx) {
    const auto& alg = cx.algebra();
    const auto& gens = cx.generators();
    const auto& w2 = cx.wedges(2);
    auto v = connection_values(M, c, alg);
    // nabla_a applied to nabla_b(u_k) = sum_l Gamma^(b)_{lk} u_l
    auto second = [&](std::size_t a, std::size_t b, std::size_t k) {
        BasicPoly<F> s;
        for (std::size_t l = 0; l < M.size(); ++l) {
            const auto& g = c.gamma[b][l][k];
            if (g.is_zero())
                continue;
            s += mul(M.generators[l], apply(gens[a].derivation, g, alg));
            s += g * v[a][l];
        }
        return s;
    };
    std::vector<std::vector<BasicPoly<F>>> out;
    for (const auto& w : w2.generators) {
        const std::size_t a = w.indices[0], b = w.indices[1];
        const auto& br = cx.presentation().bracket_coeffs(a, b);
        std::vector<BasicPoly<F>> row;
        for (std::size_t k = 0; k < M.size(); ++k) {
            BasicPoly<F> s = second(a, b, k) - second(b, a, k);
            for (std::size_t p = 0; p < br.size(); ++p)
                if (!br[p].is_zero())
                    s -= mul(br[p], v[p][k]);
            row.push_back(alg.normal_form(s));
        }
        out.push_back(std::move(row));
    }
    return out;
}

struct EndoScalar {
    Poly scalar;
    /// u_l phi(u_j) = u_j phi(u_l) for all pairs, and phi(u_j) = q u_j.
    bool certified = false;
};

/// The q in A with phi(u_j) = q u_j for all j, given images phi(u_j).
inline EndoScalar endo_scalar(const RankOneModule& M, const std::vector<Poly>& images, const WeightedAlgebra& alg) {
    if (images.size() != M.size())
        throw DimensionError("endo_scalar: one image per module generator expected");
    for (std::size_t l = 0; l < M.size(); ++l)
        for (std::size_t j = l + 1; j < M.size(); ++j)
            if (!alg.normal_form(M.generators[l] * images[j] - M.generators[j] * images[l]).is_zero())
                throw ConnectionError("endo_scalar: images are not proportional to the generators (u_" +
                                      std::to_string(l) + " phi(u_" + std::to_string(j) + ") != u_" +
                                      std::to_string(j) + " phi(u_" + std::to_string(l) + "))");
    // divide phi(u_0) by u_0 degreewise
    const CyclicAction none = CyclicAction::trivial();
    const Poly& u = M.generators[0];
    const int du = M.degrees[0];
    std::set<int> degrees;
    for (const auto& [m, c] : images[0].terms())
        degrees.insert(weighted_degree(m, alg.weights()));
    EndoScalar r;
    for (int e : degrees) {
        SlotLayout q(alg, none, {Slot{e - du, std::nullopt}});
        SlotLayout target(alg, none, {Slot{e, std::nullopt}});
        QMatrix m(target.dimension(), q.dimension());
        for (std::size_t k = 0; k < q.dimension(); ++k)
            add_column_entries(m, k, target, 0, alg.normal_form(Poly::monomial(q.monomials(0)[k]) * u));
        auto x = solve(m, target.coordinates(std::vector<Poly>{degree_part(images[0], alg.weights(), e)}));
        if (!x)
            throw ConnectionError("endo_scalar: image of u_0 is not a multiple of u_0 in A");
        r.scalar += q.values(*x)[0];
    }
    for (std::size_t j = 0; j < M.size(); ++j)
        if (!alg.normal_form(r.scalar * M.generators[j] - images[j]).is_zero())
            throw ConnectionError("endo_scalar: scalar inconsistent at generator " + std::to_string(j));
    r.certified = true;
    return r;
}

/// Curvature as a 2-cochain with values in A = End_A(M).
inline Cochain curvature(const RankOneModule& M, const Connection& c, const LieRinehartComplex& cx) {
    auto vals = curvature_values(M, c, cx);
    Cochain r = cx.zero_cochain(2);
    for (std::size_t w = 0; w < vals.size(); ++w)
        r.values[w] = endo_scalar(M, vals[w], cx.algebra()).scalar;
    return r;
}

/// theta with nabla_1 - nabla_2 = theta, as a 1-cochain.
inline Cochain connection_difference(const RankOneModule& M, const Connection& c1, const Connection& c2,
                                     const LieRinehartComplex& cx) {
    auto v1 = connection_values(M, c1, cx.algebra());
    auto v2 = connection_values(M, c2, cx.algebra());
    Cochain r = cx.zero_cochain(1);
    for (std::size_t i = 0; i < v1.size(); ++i) {
        std::vector<Poly> diff;
        for (std::size_t j = 0; j < M.size(); ++j)
            diff.push_back(v1[i][j] - v2[i][j]);
        r.values[i] = endo_scalar(M, diff, cx.algebra()).scalar;
    }
    return r;
}

/// Class of a cochain in H^n, bidegree by bidegree.
struct ClassComponent {
    int degree = 0;
    std::optional<int> weight;
    Vector coordinates; // on the representatives of H^n at this bidegree
    std::size_t cohomology_dimension = 0;
    bool zero = true;
};

struct CohomologyClassReport {
    bool cocycle = true;
    bool zero = true;
    std::vector<ClassComponent> components;
};

/// With `by_weight`, components are split by xi-weight as well.
inline CohomologyClassReport class_of(const LieRinehartComplex& cx, const Cochain& z, bool by_weight) {
    CohomologyClassReport r;
    if (!cx.satisfies_relations(z) || !cx.differential(z).is_zero()) {
        r.cocycle = false;
        r.zero = false;
        return r;
    }
    std::set<std::pair<int, std::optional<int>>> keys;
    for (const auto& [e, t] : cx.bidegrees(z))
        keys.emplace(e, by_weight ? std::optional<int>(t) : std::nullopt);
    for (const auto& [e, t] : keys) {
        CohomologyResult h = cx.cohomology(z.n, e, t);
        auto coords = class_coordinates(h, cx.component(z, e, t));
        if (!coords)
            throw std::logic_error("class_of: cocycle component not expressible in the cohomology basis");
        ClassComponent c{e, t, *coords, h.dimension, is_zero_vector(*coords)};
        r.zero = r.zero && c.zero;
        r.components.push_back(std::move(c));
    }
    return r;
}

struct IntegrabilityClass {
    Cochain curvature;
    CohomologyClassReport cls;
    bool integrable = false; // curvature itself is zero
    bool zero = false;       // class vanishes: some integrable connection exists
};

inline IntegrabilityClass integrability_class(const RankOneModule& M, const Connection& c, const LieRinehartComplex& cx,
                                              bool by_weight = false) {
    auto rep = verify_connection(M, c, cx);
    if (!rep.ok)
        throw ConnectionError("integrability_class: not a connection: " + describe(rep.violations.front()));
    IntegrabilityClass r;
    r.curvature = curvature(M, c, cx);
    r.integrable = r.curvature.is_zero();
    r.cls = class_of(cx, r.curvature, by_weight);
    if (!r.cls.cocycle)
        throw std::logic_error("integrability_class: curvature is not a 2-cocycle");
    r.zero = r.cls.zero;
    return r;
}

/// g^k * nabla, elementwise: Gamma'^(i)_{lj} = xi^(k(wt u_l - w_i - wt u_j)) (g^k * Gamma^(i)_{lj}).
template <class F>
BasicConnection<Cyclotomic> act_on_connection(const RankOneModule& M, const LieRinehartComplex& cx, int k,
                                              const BasicConnection<F>& c) {
    if (!M.equivariant())
        throw ConnectionError("act_on_connection: module has no equivariant structure");
    const auto& act = cx.action();
    const auto& w = *M.weights;
    BasicConnection<Cyclotomic> r = BasicConnection<Cyclotomic>::zero(c.gamma.size(), M.size());
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        for (std::size_t l = 0; l < M.size(); ++l)
            for (std::size_t j = 0; j < M.size(); ++j) {
                long shift = static_cast<long>(k) * (w[l] - cx.generators()[i].weight - w[j]);
                r.gamma[i][l][j] = act_on_poly(act, k, c.gamma[i][l][j]);
                r.gamma[i][l][j] *= Cyclotomic::root_power(act.order, shift);
            }
    return r;
}

/// g^k * R for curvature values R(W)(u_k): scaled by xi^(-k(wt W + wt u)) after g^k.
template <class F>
std::vector<std::vector<BasicPoly<Cyclotomic>>> act_on_curvature_values(
    const RankOneModule& M, const LieRinehartComplex& cx, int k, const std::vector<std::vector<BasicPoly<F>>>& vals) {
    const auto& act = cx.action();
    const auto& w2 = cx.wedges(2).generators;
    std::vector<std::vector<BasicPoly<Cyclotomic>>> out;
    for (std::size_t w = 0; w < vals.size(); ++w) {
        std::vector<BasicPoly<Cyclotomic>> row;
        for (std::size_t j = 0; j < vals[w].size(); ++j) {
            auto p = act_on_poly(act, k, vals[w][j]);
            p *= Cyclotomic::root_power(act.order, -static_cast<long>(k) * (w2[w].weight + (*M.weights)[j]));
            row.push_back(std::move(p));
        }
        out.push_back(std::move(row));
    }
    return out;
}

/// (1/m) sum_k g^k * nabla, over Q: keeps the terms of Gamma^(i)_{lj} of
/// weight w_i + wt u_j - wt u_l.
inline Connection average_connection(const RankOneModule& M, const Connection& c, const LieRinehartComplex& cx) {
    if (!M.equivariant())
        throw ConnectionError("average_connection: module has no equivariant structure");
    const auto& act = cx.action();
    const auto& w = *M.weights;
    Connection r = Connection::zero(c.gamma.size(), M.size());
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        for (std::size_t l = 0; l < M.size(); ++l)
            for (std::size_t j = 0; j < M.size(); ++j)
                r.gamma[i][l][j] = weight_part(c.gamma[i][l][j], act, cx.generators()[i].weight + w[j] - w[l]);
    return r;
}

inline bool is_invariant(const RankOneModule& M, const Connection& c, const LieRinehartComplex& cx) {
    return average_connection(M, c, cx) == c;
}

struct ModuliReport {
    Cochain difference;
    CohomologyClassReport cls;
    bool equivalent = false;
};

/// Compares two integrable connections by the H^1 class of their
/// difference. `by_weight` restricts to xi-weight blocks (equivariant mode).
inline ModuliReport moduli_class(const RankOneModule& M, const Connection& c1, const Connection& c2,
                                 const LieRinehartComplex& cx, bool by_weight = false) {
    for (const Connection* c : {&c1, &c2}) {
        auto rep = verify_connection(M, *c, cx);
        if (!rep.ok)
            throw ConnectionError("moduli_class: not a connection: " + describe(rep.violations.front()));
        if (!curvature(M, *c, cx).is_zero())
            throw ConnectionError("moduli_class: connection is not integrable");
    }
    ModuliReport r;
    r.difference = connection_difference(M, c1, c2, cx);
    r.cls = class_of(cx, r.difference, by_weight);
    if (!r.cls.cocycle)
        throw std::logic_error("moduli_class: difference of integrable connections is not a 1-cocycle");
    r.equivalent = r.cls.zero;
    return r;
}

/// Some homogeneous connection on M (Gamma of internal degree 0), found
/// by a linear solve; with `invariant`, only G-invariant ones. nullopt when
/// none exists.
inline std::optional<Connection> solve_connection(const RankOneModule& M, const LieRinehartComplex& cx,
                                                  bool invariant = false) {
    const auto& alg = cx.algebra();
    const auto& act = cx.action();
    const auto& gens = cx.generators();
    if (invariant && !M.equivariant())
        throw ConnectionError("solve_connection: invariant connections need an equivariant module");
    const std::size_t k = gens.size(), r = M.size();
    auto slot_index = [r](std::size_t i, std::size_t l, std::size_t j) { return (i * r + l) * r + j; };
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t j = 0; j < r; ++j) {
                Slot s{gens[i].degree + M.degrees[j] - M.degrees[l], std::nullopt};
                if (invariant)
                    s.weight = act.residue(gens[i].weight + (*M.weights)[j] - (*M.weights)[l]);
                slots.push_back(s);
            }
    SlotLayout unknowns(alg, act, slots);

    // rows: one block per (syzygy, i) and per (Der relation, j)
    std::vector<Slot> row_slots;
    for (const auto& s : M.syzygies)
        for (std::size_t i = 0; i < k; ++i)
            row_slots.push_back({s.degree + gens[i].degree, std::nullopt});
    for (const auto& q : cx.presentation().relations)
        for (std::size_t j = 0; j < r; ++j)
            row_slots.push_back({q.degree + M.degrees[j], std::nullopt});
    SlotLayout rows(alg, CyclicAction::trivial(), row_slots);
    QMatrix m(rows.dimension(), unknowns.dimension());
    std::vector<Poly> rhs(row_slots.size());

    std::size_t row = 0;
    for (const auto& s : M.syzygies)
        for (std::size_t i = 0; i < k; ++i, ++row) {
            // sum_j G_i(s_j) u_j + sum_{j,l} s_j u_l Gamma^(i)_{lj} = 0
            Poly known;
            for (std::size_t j = 0; j < r; ++j)
                known += apply(gens[i].derivation, s.coeffs[j], alg) * M.generators[j];
            rhs[row] = -alg.normal_form(known);
            for (std::size_t l = 0; l < r; ++l)
                for (std::size_t j = 0; j < r; ++j) {
                    std::size_t slot = slot_index(i, l, j);
                    Poly factor = alg.normal_form(s.coeffs[j] * M.generators[l]);
                    if (factor.is_zero())
                        continue;
                    for (std::size_t t = 0; t < unknowns.monomials(slot).size(); ++t)
                        add_column_entries(m, unknowns.offset(slot) + t, rows, row,
                                           alg.normal_form(factor * Poly::monomial(unknowns.monomials(slot)[t])));
                }
        }
    for (const auto& q : cx.presentation().relations)
        for (std::size_t j = 0; j < r; ++j, ++row) {
            // sum_i r_i sum_l Gamma^(i)_{lj} u_l = 0
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < r; ++l) {
                    std::size_t slot = slot_index(i, l, j);
                    Poly factor = alg.normal_form(q.coeffs[i] * M.generators[l]);
                    if (factor.is_zero())
                        continue;
                    for (std::size_t t = 0; t < unknowns.monomials(slot).size(); ++t)
                        add_column_entries(m, unknowns.offset(slot) + t, rows, row,
                                           alg.normal_form(factor * Poly::monomial(unknowns.monomials(slot)[t])));
                }
        }
    Vector b = rows.coordinates(rhs);
    std::optional<Vector> x;
    if (unknowns.dimension() == 0)
        x = is_zero_vector(b) ? std::optional<Vector>(Vector{}) : std::nullopt;
    else
        x = solve(m, b);
    if (!x)
        return std::nullopt;
    auto vals = unknowns.values(*x);
    Connection c = Connection::zero(k, r);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < r; ++l)
            for (std::size_t j = 0; j < r; ++j)
                c.gamma[i][l][j] = vals[slot_index(i, l, j)];
    return c;
}

} // namespace eqlr
