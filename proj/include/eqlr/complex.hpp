#pragma once
//
// The Lie-Rinehart complex C^n = Hom_A(wedge^n Der_k(A), A) with the
// trivial connection, its differential and its graded cohomology.
//
// A cochain is stored by its values on the wedge generators
// G_{i_0} ^ ... ^ G_{i_{n-1}}; A-multilinearity determines everything else.
// The differential is
//
//   (d xi)(D_0 ^ ... ^ D_n) = sum_i (-1)^i D_i(xi(D_0 ^ .. ^ D_i^ .. ^ D_n))
//     + sum_{j<k} (-1)^(j+k) xi([D_j, D_k] ^ D_0 ^ .. D_j^ .. D_k^ .. ^ D_n)
//
// evaluated on generators, with brackets expanded through the structure
// constants of the presentation.
//

#include "deriv.hpp"
#include "presentation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace eqlr {

template <class F>
struct BasicCochain {
    int n = 0;
    std::vector<BasicPoly<F>> values; // one per wedge generator

    bool is_zero() const {
        for (const auto& v : values)
            if (!v.is_zero())
                return false;
        return true;
    }

    BasicCochain& operator+=(const BasicCochain& o) {
        check(o);
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] += o.values[i];
        return *this;
    }
    BasicCochain& operator-=(const BasicCochain& o) {
        check(o);
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] -= o.values[i];
        return *this;
    }
    BasicCochain& operator*=(const F& s) {
        for (auto& v : values)
            v *= s;
        return *this;
    }

    friend BasicCochain operator+(BasicCochain a, const BasicCochain& b) { return a += b; }
    friend BasicCochain operator-(BasicCochain a, const BasicCochain& b) { return a -= b; }
    friend BasicCochain operator*(BasicCochain a, const F& s) { return a *= s; }
    friend bool operator==(const BasicCochain& a, const BasicCochain& b) { return a.n == b.n && a.values == b.values; }

private:
    void check(const BasicCochain& o) const {
        if (o.n != n || o.values.size() != values.size())
            throw DimensionError("cochain degree mismatch");
    }
};

using Cochain = BasicCochain<Rational>;

template <class F>
BasicCochain<F> lift(const Cochain& c) {
    BasicCochain<F> r{c.n, {}};
    for (const auto& v : c.values)
        r.values.push_back(lift<F>(v));
    return r;
}

struct CohomologyClass {
    int n = 0;
    int degree = 0;
    std::optional<int> weight;
    Cochain representative;
};

struct CohomologyResult {
    int n = 0;
    int degree = 0;
    std::optional<int> weight;
    std::size_t cochain_dimension = 0;
    std::size_t cocycle_dimension = 0;
    std::size_t coboundary_dimension = 0;
    std::size_t dimension = 0;
    std::vector<CohomologyClass> classes;

    // Slot coordinates of the representatives and of a spanning set of the
    // coboundaries, for expressing classes.
    SlotLayout layout;
    std::vector<Vector> representative_coordinates;
    std::vector<Vector> coboundary_coordinates;
};

/// The trivial connection on A: nabla_D(a) = D(a).
inline Poly trivial_connection_apply(const Derivation& d, const Poly& a, const WeightedAlgebra& alg) {
    return apply(d, a, alg);
}

class LieRinehartComplex {
public:
    explicit LieRinehartComplex(DerPresentation p) : pres_(std::move(p)), cache_(std::make_shared<Cache>()) {
        for (int n = 0; n <= static_cast<int>(pres_.rank()) + 1; ++n)
            wedges_.push_back(wedge_presentation(pres_, n));
    }

    LieRinehartComplex(const WeightedAlgebra& alg, const CyclicAction& act, int bound)
        : LieRinehartComplex(build_presentation(alg, act, bound)) {}

    const DerPresentation& presentation() const { return pres_; }
    const WeightedAlgebra& algebra() const { return pres_.algebra; }
    const CyclicAction& action() const { return pres_.action; }
    int bound() const { return pres_.bound; }
    const std::vector<GradedDerivation>& generators() const { return pres_.generators; }

    /// Exterior powers beyond the number of generators are zero.
    const WedgePresentation& wedges(int n) const {
        static const WedgePresentation empty{};
        if (n < 0 || n >= static_cast<int>(wedges_.size()))
            return empty;
        return wedges_[static_cast<std::size_t>(n)];
    }

    Cochain zero_cochain(int n) const { return Cochain{n, std::vector<Poly>(wedges(n).generators.size())}; }

    SlotLayout layout(int n, int e, std::optional<int> t = std::nullopt) const {
        return cochain_layout(wedges(n), algebra(), action(), e, t);
    }

    std::shared_ptr<const CochainSpace> cochain_space(int n, int e, std::optional<int> t = std::nullopt) const {
        auto key = std::make_tuple(n, e, t ? action().residue(*t) : -1);
        {
            std::lock_guard lock(cache_->mutex);
            if (auto it = cache_->spaces.find(key); it != cache_->spaces.end())
                return it->second;
        }
        auto space = std::make_shared<const CochainSpace>(eqlr::cochain_space(wedges(n), algebra(), action(), e, t));
        std::lock_guard lock(cache_->mutex);
        return cache_->spaces.emplace(key, std::move(space)).first->second;
    }

    Cochain cochain(const CochainSpace& space, const Vector& coords) const {
        return Cochain{space.n, space.layout.values(coords)};
    }

    /// Coordinates of c in the slot layout of (n, e, t); c must be
    /// bihomogeneous of that type.
    Vector coordinates(const Cochain& c, int e, std::optional<int> t = std::nullopt) const {
        return layout(c.n, e, t).coordinates(c.values);
    }

    template <class F>
    BasicCochain<F> differential(const BasicCochain<F>& c) const {
        const WedgePresentation& src = wedges(c.n);
        const WedgePresentation& dst = wedges(c.n + 1);
        if (c.values.size() != src.generators.size())
            throw DimensionError("differential: cochain does not match the presentation");
        BasicCochain<F> out{c.n + 1, std::vector<BasicPoly<F>>(dst.generators.size())};
        for (std::size_t w = 0; w < dst.generators.size(); ++w) {
            const auto& idx = dst.generators[w].indices;
            BasicPoly<F> acc;
            for (std::size_t a = 0; a < idx.size(); ++a) {
                std::vector<std::size_t> sub = without(idx, a);
                const auto& val = c.values[src.index.at(sub)];
                if (val.is_zero())
                    continue;
                BasicPoly<F> term = apply(pres_.generators[idx[a]].derivation, val, algebra());
                if (a % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    const auto& coeffs = pres_.bracket_coeffs(idx[a], idx[b]);
                    std::vector<std::size_t> rest = without(without(idx, b), a);
                    const bool odd = (a + b) % 2 == 1;
                    for (std::size_t l = 0; l < coeffs.size(); ++l) {
                        if (coeffs[l].is_zero())
                            continue;
                        auto ins = wedge_insert(l, rest);
                        if (!ins)
                            continue;
                        const auto& val = c.values[src.index.at(ins->first)];
                        if (val.is_zero())
                            continue;
                        BasicPoly<F> term = mul(coeffs[l], val);
                        if ((ins->second < 0) != odd)
                            acc -= term;
                        else
                            acc += term;
                    }
                }
            out.values[w] = algebra().normal_form(acc);
        }
        return out;
    }

    /// xi(D_1 ^ ... ^ D_n) for arbitrary derivations, by expanding each D_a
    /// in the generators.
    template <class F>
    BasicPoly<F> evaluate(const BasicCochain<F>& c, const std::vector<Derivation>& ds) const {
        if (static_cast<int>(ds.size()) != c.n)
            throw DimensionError("evaluate: expected " + std::to_string(c.n) + " derivations");
        std::vector<std::vector<BasicPoly<F>>> coeffs;
        for (const auto& d : ds) {
            coeffs.emplace_back();
            for (const auto& p : express_in_generators(d, pres_.generators, algebra(), action()))
                coeffs.back().push_back(lift<F>(p));
        }
        return evaluate_expanded(c, coeffs);
    }

    /// Same as evaluate, with each argument already given as a coefficient
    /// vector over the generators.
    template <class F>
    BasicPoly<F> evaluate_expanded(const BasicCochain<F>& c, const std::vector<std::vector<BasicPoly<F>>>& coeffs) const {
        const WedgePresentation& src = wedges(c.n);
        if (static_cast<int>(coeffs.size()) != c.n)
            throw DimensionError("evaluate: expected " + std::to_string(c.n) + " arguments");
        BasicPoly<F> acc;
        std::vector<std::size_t> chosen;
        expand(c, src, coeffs, 0, chosen, BasicPoly<F>(F(1)), acc);
        return algebra().normal_form(acc);
    }

    /// True when c annihilates every relation of wedge^n Der.
    bool satisfies_relations(const Cochain& c) const {
        const WedgePresentation& w = wedges(c.n);
        for (const auto& r : w.relations) {
            Poly s;
            for (std::size_t i = 0; i < r.coeffs.size(); ++i)
                s += r.coeffs[i] * c.values[i];
            if (!algebra().normal_form(s).is_zero())
                return false;
        }
        return true;
    }

    /// (internal degree, xi-weight) pairs occurring in c. A value term x^a on
    /// generator W contributes degree deg(x^a) - deg(W) and weight
    /// wt(x^a) - wt(W).
    template <class F>
    std::set<std::pair<int, int>> bidegrees(const BasicCochain<F>& c) const {
        std::set<std::pair<int, int>> out;
        const auto& gens = wedges(c.n).generators;
        for (std::size_t w = 0; w < c.values.size(); ++w)
            for (const auto& [m, q] : c.values[w].terms())
                out.emplace(weighted_degree(m, algebra().weights()) - gens[w].degree,
                            action().residue(action().weight(m) - gens[w].weight));
        return out;
    }

    /// Component of c of internal degree e (and xi-weight t when given).
    template <class F>
    BasicCochain<F> component(const BasicCochain<F>& c, int e, std::optional<int> t = std::nullopt) const {
        const auto& gens = wedges(c.n).generators;
        BasicCochain<F> r{c.n, std::vector<BasicPoly<F>>(c.values.size())};
        for (std::size_t w = 0; w < c.values.size(); ++w)
            for (const auto& [m, q] : c.values[w].terms()) {
                if (weighted_degree(m, algebra().weights()) - gens[w].degree != e)
                    continue;
                if (t && action().residue(action().weight(m) - gens[w].weight) != action().residue(*t))
                    continue;
                r.values[w].add_term(m, q);
            }
        return r;
    }

    /// H^n at internal degree e (xi-weight block t when given).
    CohomologyResult cohomology(int n, int e, std::optional<int> t = std::nullopt) const {
        CohomologyResult r;
        r.n = n;
        r.degree = e;
        r.weight = t;
        auto space = cochain_space(n, e, t);
        r.layout = space->layout;
        r.cochain_dimension = space->dimension();

        // coboundaries d(C^{n-1})
        EchelonBasis image(space->layout.dimension());
        if (n > 0) {
            auto prev = cochain_space(n - 1, e, t);
            for (const auto& v : prev->basis) {
                Vector img = space->layout.coordinates(differential(cochain(*prev, v)).values);
                if (image.insert(to_sparse(img)))
                    r.coboundary_coordinates.push_back(std::move(img));
            }
        }
        r.coboundary_dimension = image.rank();
        if (space->dimension() == 0)
            return r;

        // cocycles: kernel of d on C^n
        SlotLayout next = layout(n + 1, e, t);
        QMatrix dmat(next.dimension(), space->dimension());
        for (std::size_t j = 0; j < space->basis.size(); ++j) {
            Cochain dc = differential(cochain(*space, space->basis[j]));
            for (const auto& [pos, q] : next.sparse_coordinates(dc.values))
                dmat.set(pos, j, q);
        }
        auto kernel = kernel_basis(dmat);
        r.cocycle_dimension = kernel.size();
        for (const auto& k : kernel) {
            Vector coords(space->layout.dimension());
            for (std::size_t j = 0; j < k.size(); ++j)
                if (!k[j].is_zero())
                    for (std::size_t i = 0; i < coords.size(); ++i)
                        coords[i] += k[j] * space->basis[j][i];
            if (image.insert(to_sparse(coords))) {
                r.classes.push_back({n, e, t, cochain(*space, coords)});
                r.representative_coordinates.push_back(std::move(coords));
            }
        }
        r.dimension = r.cocycle_dimension - r.coboundary_dimension;
        if (r.dimension != r.classes.size())
            throw std::logic_error("cohomology: image is not contained in the cocycles");
        return r;
    }

private:
    static std::vector<std::size_t> without(const std::vector<std::size_t>& v, std::size_t pos) {
        std::vector<std::size_t> r;
        r.reserve(v.size() - 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != pos)
                r.push_back(v[i]);
        return r;
    }

    // Sum over distinct generator choices, sorting each choice into an
    // increasing tuple with the matching sign.
    template <class F>
    void expand(const BasicCochain<F>& c, const WedgePresentation& src, const std::vector<std::vector<BasicPoly<F>>>& coeffs,
                std::size_t a, std::vector<std::size_t>& chosen, const BasicPoly<F>& weight, BasicPoly<F>& acc) const {
        if (a == coeffs.size()) {
            std::vector<std::size_t> sorted;
            int sign = 1;
            for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
                auto ins = wedge_insert(*it, sorted);
                sign *= ins->second;
                sorted = std::move(ins->first);
            }
            BasicPoly<F> term = weight * c.values[src.index.at(sorted)];
            if (sign < 0)
                acc -= term;
            else
                acc += term;
            return;
        }
        for (std::size_t i = 0; i < coeffs[a].size(); ++i) {
            if (coeffs[a][i].is_zero())
                continue;
            if (std::find(chosen.begin(), chosen.end(), i) != chosen.end())
                continue;
            chosen.push_back(i);
            expand(c, src, coeffs, a + 1, chosen, algebra().normal_form(weight * coeffs[a][i]), acc);
            chosen.pop_back();
        }
    }

    struct Cache {
        std::mutex mutex;
        std::map<std::tuple<int, int, int>, std::shared_ptr<const CochainSpace>> spaces;
    };

    DerPresentation pres_;
    std::vector<WedgePresentation> wedges_;
    std::shared_ptr<Cache> cache_;
};

template <class F>
BasicCochain<F> differential(const LieRinehartComplex& cx, const BasicCochain<F>& c) {
    return cx.differential(c);
}

inline CohomologyResult cohomology(const LieRinehartComplex& cx, int n, int e, std::optional<int> t = std::nullopt) {
    return cx.cohomology(n, e, t);
}

/// Coordinates of a cocycle's class on the representatives of r; nullopt
/// when z is not a cocycle of that bidegree. All zeros means z is a
/// coboundary.
inline std::optional<Vector> class_coordinates(const CohomologyResult& r, const Cochain& z) {
    Vector target;
    try {
        target = r.layout.coordinates(z.values);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    std::vector<Vector> cols = r.representative_coordinates;
    cols.insert(cols.end(), r.coboundary_coordinates.begin(), r.coboundary_coordinates.end());
    if (cols.empty())
        return is_zero_vector(target) ? std::optional<Vector>(Vector{}) : std::nullopt;
    auto x = solve(QMatrix::from_columns(cols, r.layout.dimension()), target);
    if (!x)
        return std::nullopt;
    x->resize(r.representative_coordinates.size());
    return x;
}

} // namespace eqlr
