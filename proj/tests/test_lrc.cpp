#include "support.hpp"

#include <gtest/gtest.h>

using namespace eqlr;

namespace {

constexpr int kInstances = 20;

Poly constant_one() { return Poly(Rational(1)); }

// A different coefficient vector for the same derivation: add a monomial
// multiple of a relation.
std::vector<Poly> perturb(const LieRinehartComplex& cx, std::vector<Poly> v, fixtures::Random& rng) {
    const auto& rels = cx.presentation().relations;
    const auto& r = rels[static_cast<std::size_t>(rng.integer(0, static_cast<int>(rels.size()) - 1))];
    Poly m = rng.homogeneous(cx.algebra(), rng.integer(0, 2), 1);
    if (m.is_zero())
        m = constant_one();
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = cx.algebra().normal_form(v[i] + m * r.coeffs[i]);
    return v;
}

std::vector<std::size_t> dims(const LieRinehartComplex& cx, int n, int lo, int hi) {
    std::vector<std::size_t> out;
    for (int e = lo; e <= hi; ++e)
        out.push_back(cx.cohomology(n, e).dimension);
    return out;
}

} // namespace

TEST(TrivialConnection, Examples) {
    auto alg = fixtures::cubic();
    EXPECT_EQ(trivial_connection_apply(partial_derivation(2), parse_poly("x3^2 + x1"), alg), parse_poly("2*x3"));
    EXPECT_EQ(trivial_connection_apply(euler_derivation(alg), constant_one(), alg), Poly());
}

TEST(TrivialConnection, LeibnizAndLinearity) {
    fixtures::Random rng(41);
    const auto& cx = fixtures::cubic_complex();
    const auto& alg = cx.algebra();
    for (int e = -3; e <= 3; ++e)
        for (int k = 0; k < kInstances; ++k) {
            Derivation d = rng.derivation(alg, e);
            Poly a = rng.homogeneous(alg, rng.integer(0, 3)), m = rng.homogeneous(alg, rng.integer(0, 3));
            EXPECT_EQ(trivial_connection_apply(d, alg.normal_form(a * m), alg),
                      alg.normal_form(a * trivial_connection_apply(d, m, alg) + apply(d, a, alg) * m));
            EXPECT_EQ(trivial_connection_apply(scale(a, d, alg), m, alg),
                      alg.normal_form(a * trivial_connection_apply(d, m, alg)));
        }
}

TEST(Differential, SquaresToZero) {
    fixtures::Random rng(42);
    for (const LieRinehartComplex* cx : {&fixtures::cubic_complex(), &fixtures::e8_complex()})
        for (int n = 0; n <= 1; ++n)
            for (int e = -3; e <= 3; ++e)
                for (int k = 0; k < kInstances; ++k) {
                    Cochain c = rng.cochain(*cx, n, e);
                    Cochain dc = cx->differential(c);
                    EXPECT_TRUE(cx->satisfies_relations(dc));
                    EXPECT_TRUE(cx->differential(dc).is_zero()) << "n=" << n << " e=" << e;
                }
}

TEST(Differential, LandsInVanishingTopDegree) {
    fixtures::Random rng(43);
    const auto& cx = fixtures::cubic_complex();
    for (int e = -3; e <= 3; ++e)
        for (int k = 0; k < kInstances; ++k)
            EXPECT_TRUE(cx.differential(rng.cochain(cx, 2, e)).is_zero());
}

TEST(Differential, MatchesInvariantFormula) {
    fixtures::Random rng(44);
    const auto& cx = fixtures::cubic_complex();
    const auto& alg = cx.algebra();
    for (int e = -3; e <= 3; ++e)
        for (int k = 0; k < kInstances; ++k) {
            Cochain c0 = rng.cochain(cx, 0, e);
            Derivation d = rng.derivation(alg, rng.integer(0, 2));
            EXPECT_EQ(cx.evaluate(cx.differential(c0), {d}), apply(d, c0.values[0], alg));

            Cochain c1 = rng.cochain(cx, 1, e);
            Derivation d1 = rng.derivation(alg, rng.integer(0, 2)), d2 = rng.derivation(alg, rng.integer(0, 2));
            Poly expected = apply(d1, cx.evaluate(c1, {d2}), alg) - apply(d2, cx.evaluate(c1, {d1}), alg) -
                            cx.evaluate(c1, {bracket(d1, d2, alg)});
            EXPECT_EQ(cx.evaluate(cx.differential(c1), {d1, d2}), expected);
        }
}

TEST(Cochains, WellDefinedUnderAlternativeExpressions) {
    fixtures::Random rng(45);
    const auto& cx = fixtures::cubic_complex();
    const auto& alg = cx.algebra();
    ASSERT_FALSE(cx.presentation().relations.empty());
    for (int e = -3; e <= 3; ++e)
        for (int k = 0; k < kInstances; ++k) {
            Derivation d1 = rng.derivation(alg, rng.integer(0, 2)), d2 = rng.derivation(alg, rng.integer(0, 2));
            auto v1 = express_in_generators(d1, cx.generators(), alg, cx.action());
            auto v2 = express_in_generators(d2, cx.generators(), alg, cx.action());
            auto w1 = perturb(cx, v1, rng), w2 = perturb(cx, v2, rng);
            EXPECT_EQ(combine(w1, cx.generators(), alg), d1);

            Cochain c1 = rng.cochain(cx, 1, e);
            EXPECT_EQ(cx.evaluate_expanded(c1, {w1}), cx.evaluate_expanded(c1, {v1}));
            Cochain c2 = rng.cochain(cx, 2, e);
            EXPECT_EQ(cx.evaluate_expanded(c2, {w1, w2}), cx.evaluate_expanded(c2, {v1, v2}));
            // alternating
            EXPECT_EQ(cx.evaluate_expanded(c2, {v2, v1}), -cx.evaluate_expanded(c2, {v1, v2}));
        }
}

TEST(Differential, NonzeroOnCoordinate) {
    const auto& cx = fixtures::cubic_complex();
    Cochain x1{0, {parse_poly("x1")}};
    Cochain dx1 = cx.differential(x1);
    EXPECT_FALSE(dx1.is_zero());
    // value on the Euler generator is E(x1) = x1
    EXPECT_EQ(dx1.values[0], parse_poly("x1"));
}

TEST(Cohomology, CubicConeAcrossWindow) {
    const auto& cx = fixtures::cubic_complex();
    std::vector<std::size_t> expected(13, 0);
    expected[6] = 1;
    for (int n = 0; n <= 2; ++n)
        EXPECT_EQ(dims(cx, n, -6, 6), expected) << "n=" << n;
}

TEST(Cohomology, E8HasOnlyConstants) {
    const auto& cx = fixtures::e8_complex();
    std::vector<std::size_t> zero(21, 0), h0(21, 0);
    h0[10] = 1;
    EXPECT_EQ(dims(cx, 0, -10, 10), h0);
    EXPECT_EQ(dims(cx, 1, -10, 10), zero);
    EXPECT_EQ(dims(cx, 2, -10, 10), zero);
}

TEST(Cohomology, DegreeZeroIsConstants) {
    for (const LieRinehartComplex* cx : {&fixtures::cubic_complex(), &fixtures::e8_complex()}) {
        auto r = cx->cohomology(0, 0);
        ASSERT_EQ(r.dimension, 1u);
        EXPECT_EQ(r.classes[0].representative.values[0].size(), 1u);
        EXPECT_TRUE(cx->differential(Cochain{0, {constant_one()}}).is_zero());
        for (int e = 1; e <= 4; ++e)
            EXPECT_EQ(cx->cohomology(0, e).dimension, 0u);
    }
}

TEST(Cohomology, RepresentativesAreCocyclesAndClassesResolve) {
    fixtures::Random rng(46);
    const auto& cx = fixtures::cubic_complex();
    for (int n = 1; n <= 2; ++n) {
        auto r = cx.cohomology(n, 0);
        ASSERT_EQ(r.dimension, 1u);
        const auto& z = r.classes[0].representative;
        EXPECT_TRUE(cx.differential(z).is_zero());
        // z + d(b) has the same class
        Cochain shifted = z + cx.differential(rng.cochain(cx, n - 1, 0));
        auto coords = class_coordinates(r, shifted);
        ASSERT_TRUE(coords);
        EXPECT_EQ(*coords, (Vector{Rational(1)}));
        auto zero = class_coordinates(r, cx.differential(rng.cochain(cx, n - 1, 0)));
        ASSERT_TRUE(zero);
        EXPECT_TRUE(is_zero_vector(*zero));
    }
}

TEST(Cohomology, StableUnderBoundIncrease) {
    LieRinehartComplex cubic8(fixtures::cubic(), CyclicAction::trivial(), 8);
    LieRinehartComplex e8_62(fixtures::e8(), CyclicAction::trivial(), 62);
    for (int n = 0; n <= 2; ++n) {
        EXPECT_EQ(dims(fixtures::cubic_complex(), n, -6, 6), dims(cubic8, n, -6, 6));
        EXPECT_EQ(dims(fixtures::e8_complex(), n, -10, 10), dims(e8_62, n, -10, 10));
    }
}

TEST(Cochains, ComponentsAndBidegrees) {
    fixtures::Random rng(47);
    const auto& cx = fixtures::cubic_complex();
    Cochain a = rng.cochain(cx, 1, 0), b = rng.cochain(cx, 1, 2);
    Cochain sum = a + b;
    EXPECT_EQ(cx.component(sum, 0), a);
    EXPECT_EQ(cx.component(sum, 2), b);
    for (const auto& [e, t] : cx.bidegrees(sum))
        EXPECT_TRUE(e == 0 || e == 2);
}
