// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "support.hpp"

#include <functional>
#include <iostream>

using namespace eqlr;

namespace {

struct Tally {
    long checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5)
            failures.push_back(what);
        else if (!ok)
            failures.emplace_back();
    }
};

std::string at(const std::string& what, int n, int e) {
    return what + " (n=" + std::to_string(n) + ", e=" + std::to_string(e) + ")";
}

long series_coefficient(const std::array<int, 3>& w, int d, int e) {
    std::vector<long> s(static_cast<std::size_t>(e) + 1, 0);
    s[0] = 1;
    for (int wi : w)
        for (int k = wi; k <= e; ++k)
            s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - wi)];
    for (int k = e; k >= d; --k)
        s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(k - d)];
    return s[static_cast<std::size_t>(e)];
}

Connection shifted(Connection c, const Cochain& theta) {
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        for (std::size_t l = 0; l < c.gamma[i].size(); ++l)
            c.gamma[i][l][l] += theta.values[i];
    return c;
}

// --- criteria ---

void cubic_cohomology(Tally& t) {
    const auto& cx = fixtures::cubic_complex();
    const long predicted = static_cast<long>(cx.algebra().graded_basis(cx.algebra().canonical_shift()).size());
    t.expect(predicted == 1, "dim A_{d - sum d_i} = 1");
    for (int n = 0; n <= 2; ++n)
        for (int e = -6; e <= 6; ++e)
            t.expect(cx.cohomology(n, e).dimension == (e == 0 ? 1u : 0u), at("dim H", n, e));
}

void equivariant_weights(Tally& t) {
    const auto& cx = fixtures::cubic_z3_complex();
    const auto& act = cx.action();
    const int chi = act.residue(act.exponents[0] + act.exponents[1] + act.exponents[2] - act.order);
    t.expect(chi == 1, "m1 + m2 + m3 - m = 1 mod 3");
    for (int n = 1; n <= 2; ++n) {
        auto h = cx.cohomology(n, 0);
        t.expect(h.dimension == 1, at("one class", n, 0));
        for (const auto& c : h.classes)
            t.expect(xi_weight_of_cochain(cx, c.representative) == chi, at("class weight", n, 0));
        for (int e = -6; e <= 6; ++e)
            t.expect(invariant_cohomology(cx, n, e, true).dimension == 0, at("invariant dimension", n, e));
    }
}

void e8_cohomology(Tally& t) {
    const auto& cx = fixtures::e8_complex();
    t.expect(cx.algebra().canonical_shift() == -1, "d - sum d_i = -1");
    t.expect(cx.algebra().graded_basis(-1).size() == 0, "A_{-1} = 0");
    for (int n = 1; n <= 2; ++n)
        for (int e = -30; e <= 30; ++e)
            t.expect(cx.cohomology(n, e).dimension == 0, at("dim H", n, e));
    t.expect(cx.cohomology(0, 0).dimension == 1, "H^0 = constants");
}

void property_suite(Tally& t) {
    constexpr int kInstances = 20;
    fixtures::Random rng;
    const auto& cx = fixtures::cubic_complex();
    const auto& gx = fixtures::cubic_z3_complex();
    const auto& alg = cx.algebra();
    const auto& rels = cx.presentation().relations;
    auto unit = unit_module(gx.algebra(), gx.action());
    for (int e = -3; e <= 3; ++e)
        for (int k = 0; k < kInstances; ++k) {
            // d o d = 0
            for (int n = 0; n <= 1; ++n) {
                Cochain c = rng.cochain(cx, n, e);
                t.expect(cx.differential(cx.differential(c)).is_zero(), at("d o d", n, e));
            }
            // Leibniz
            Derivation d = rng.derivation(alg, e);
            Poly a = rng.homogeneous(alg, rng.integer(0, 3)), b = rng.homogeneous(alg, rng.integer(0, 3));
            Poly rhs = alg.normal_form(apply(d, a, alg) * b + a * apply(d, b, alg));
            t.expect(apply(d, alg.normal_form(a * b), alg) == rhs, at("Leibniz apply", 0, e));
            t.expect(trivial_connection_apply(d, alg.normal_form(a * b), alg) == rhs, at("Leibniz connection", 0, e));
            // bracket
            Derivation d2 = rng.derivation(alg, rng.integer(0, 2)), d3 = rng.derivation(alg, rng.integer(0, 2));
            t.expect(bracket(d, d2, alg) + bracket(d2, d, alg) == Derivation{}, at("antisymmetry", 0, e));
            Derivation jac = bracket(d, bracket(d2, d3, alg), alg) + bracket(d2, bracket(d3, d, alg), alg) +
                             bracket(d3, bracket(d, d2, alg), alg);
            t.expect(jac.is_zero(), at("Jacobi", 0, e));
            // well-definedness
            Derivation x = rng.derivation(alg, rng.integer(0, 2));
            auto v = express_in_generators(x, cx.generators(), alg, cx.action());
            auto w = v;
            const auto& r = rels[static_cast<std::size_t>(rng.integer(0, static_cast<int>(rels.size()) - 1))];
            Poly mult = rng.homogeneous(alg, rng.integer(0, 2), 2);
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = alg.normal_form(w[i] + mult * r.coeffs[i]);
            Cochain c1 = rng.cochain(cx, 1, e);
            t.expect(cx.evaluate_expanded(c1, {w}) == cx.evaluate_expanded(c1, {v}), at("well-defined", 1, e));
            // weight blocks, g * d = d g *, Reynolds
            for (int n = 0; n <= 1; ++n) {
                int blk = k % 3;
                Cochain dc = gx.differential(rng.cochain(gx, n, e, blk));
                t.expect(gx.component(dc, e, blk) == dc, at("weight block", n, e));
                Cochain c = rng.cochain(gx, n, e);
                t.expect(act_on_cochain(gx, 1, gx.differential(c)) == gx.differential(act_on_cochain(gx, 1, c)),
                         at("g* d = d g*", n, e));
                Cochain rc = reynolds(gx, c);
                t.expect(reynolds(gx, rc) == rc, at("Reynolds idempotent", n, e));
                t.expect(act_on_cochain(gx, 1, rc) == lift<Cyclotomic>(rc), at("Reynolds invariant", n, e));
            }
            // g * R = R_{g * nabla}
            Connection con = twisted_connection(gx, rng.cochain(gx, 1, e) + rng.cochain(gx, 1, rng.integer(0, 2)));
            t.expect(act_on_curvature_values(unit, gx, 1, curvature_values(unit, con, gx)) ==
                         curvature_values(unit, act_on_connection(unit, gx, 1, con), gx),
                     at("g* R", 2, e));
        }
}

void connection_machinery(Tally& t) {
    fixtures::Random rng(7);
    const auto& cx = fixtures::cubic_complex();
    auto unit = unit_module(cx.algebra());
    for (int e = -3; e <= 3; ++e)
        for (int k = 0; k < 20; ++k) {
            Cochain w = rng.cochain(cx, 1, e);
            t.expect(curvature(unit, twisted_connection(cx, w), cx) == cx.differential(w), at("curvature = d w", 1, e));
        }
    auto triv = trivial_connection(cx);
    t.expect(integrability_class(unit, triv, cx).zero, "trivial connection has zero class");
    t.expect(moduli_class(unit, triv, triv, cx).equivalent, "moduli(triv, triv) = 0");

    const auto& gx = fixtures::cubic_z3_complex();
    auto line = make_module({parse_poly("x1 + x2"), parse_poly("x3")}, gx.algebra(), gx.action());
    for (const auto& M : {line, unit_module(gx.algebra(), gx.action())}) {
        auto base = solve_connection(M, gx, true);
        t.expect(base.has_value(), "invariant connection found");
        if (!base)
            continue;
        t.expect(curvature(M, *base, gx).is_zero(), "invariant connection integrable");
        for (int k = 0; k < 20; ++k) {
            Cochain b = rng.cochain(gx, 0, rng.integer(0, 4), 0);
            Connection other = shifted(*base, gx.differential(b));
            t.expect(is_invariant(M, other, gx) && curvature(M, other, gx).is_zero(), "second invariant integrable");
            t.expect(moduli_class(M, *base, other, gx, true).equivalent, "invariant connections equivalent");
        }
    }
}

void stability(Tally& t) {
    LieRinehartComplex cubic8(fixtures::cubic(), CyclicAction::trivial(), 8);
    LieRinehartComplex e8_62(fixtures::e8(), CyclicAction::trivial(), 62);
    for (int n = 0; n <= 2; ++n) {
        for (int e = -6; e <= 6; ++e)
            t.expect(fixtures::cubic_complex().cohomology(n, e).dimension == cubic8.cohomology(n, e).dimension,
                     at("cubic B vs B+2", n, e));
        for (int e = -30; e <= 30; ++e)
            t.expect(fixtures::e8_complex().cohomology(n, e).dimension == e8_62.cohomology(n, e).dimension,
                     at("E8 B vs B+2", n, e));
    }
}

void hilbert_and_top_degree(Tally& t) {
    for (const LieRinehartComplex* cx : {&fixtures::cubic_complex(), &fixtures::e8_complex()}) {
        const auto& alg = cx->algebra();
        for (int e = 0; e <= 12; ++e)
            t.expect(static_cast<long>(alg.graded_basis(e).size()) ==
                         series_coefficient(alg.weights().var_weights, alg.degree(), e),
                     at("dim A_e", 0, e));
        for (int e = -30; e <= 30; ++e)
            t.expect(cx->cochain_space(3, e)->dimension() == 0, at("C^3", 3, e));
    }
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
        {"cubic cone: H^0 = H^1 = H^2 = 1 at degree 0, 0 elsewhere in [-6,6]", cubic_cohomology},
        {"cubic with Z/3 of type (3;1,1,2): H^1, H^2 classes of weight 1, invariant parts 0", equivariant_weights},
        {"E8 type: H^1 = H^2 = 0 across [-30,30]", e8_cohomology},
        {"randomized property suite", property_suite},
        {"connection machinery", connection_machinery},
        {"stability under bounds B and B+2", stability},
        {"Hilbert series oracle and vanishing C^3", hilbert_and_top_degree},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        std::string error;
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool pass = error.empty() && t.failures.empty();
        all = all && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << t.checks << " checks)";
        if (!error.empty())
            std::cout << " error: " << error;
        for (const auto& f : t.failures)
            if (!f.empty())
                std::cout << "\n    failed: " << f;
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
