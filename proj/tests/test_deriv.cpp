#include "support.hpp"

#include <gtest/gtest.h>

using namespace eqlr;

namespace {

std::vector<long> series(std::vector<std::pair<int, int>> factors, int top) {
    // product of (1 - t^a) / (1 - t^b) over the given (a, b), a == 0 meaning 1
    std::vector<long> s(static_cast<std::size_t>(top) + 1, 0);
    s[0] = 1;
    for (auto [a, b] : factors) {
        for (int k = b; k <= top; ++k)
            s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - b)];
        if (a > 0)
            for (int k = top; k >= a; --k)
                s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(k - a)];
    }
    return s;
}

long at(const std::vector<long>& s, int k) { return k < 0 ? 0 : s.at(static_cast<std::size_t>(k)); }

// dim Der_e = sum_i dim A_{e+d_i} - dim A_{e+d} + dim M_{e+d}, where M is the
// Milnor algebra k[x]/(f_1, f_2, f_3) of the isolated quasi-homogeneous f.
long der_dimension_oracle(const WeightedAlgebra& alg, int e) {
    const auto& w = alg.weights().var_weights;
    int d = alg.degree();
    int top = e + d + 1;
    if (top < 0)
        return 0;
    auto a = series({{0, w[0]}, {0, w[1]}, {d, w[2]}}, top);
    auto m = series({{d - w[0], w[0]}, {d - w[1], w[1]}, {d - w[2], w[2]}}, top);
    long dim = at(m, e + d) - at(a, e + d);
    for (int wi : w)
        dim += at(a, e + wi);
    return dim;
}

Derivation hamiltonian(const WeightedAlgebra& alg, std::size_t i, std::size_t j) {
    return partial_derivation(i, alg.normal_form(alg.partial(j))) -
           partial_derivation(j, alg.normal_form(alg.partial(i)));
}

} // namespace

TEST(Apply, Examples) {
    auto alg = fixtures::cubic();
    Derivation d1 = partial_derivation(0);
    EXPECT_EQ(apply(d1, parse_poly("x1^2*x2"), alg), parse_poly("2*x1*x2"));
    EXPECT_EQ(apply(euler_derivation(alg), parse_poly("x1*x2 + x3^2"), alg), parse_poly("2*x1*x2 + 2*x3^2"));
    // image is reduced: d/dx2 (x1^3 x2) = x1^3 = -x2^3 - x3^3
    EXPECT_EQ(apply(partial_derivation(1), parse_poly("x1^3*x2"), alg), parse_poly("-x2^3 - x3^3"));
    EXPECT_TRUE(is_tangent(euler_derivation(alg), alg));
    EXPECT_FALSE(is_tangent(d1, alg));
    EXPECT_TRUE(is_tangent(hamiltonian(alg, 0, 1), alg));
}

TEST(Apply, LeibnizRule) {
    fixtures::Random rng(21);
    for (const auto& alg : {fixtures::cubic(), fixtures::e8()}) {
        auto gens = der_generators(alg, alg.degree());
        for (int k = 0; k < 30; ++k) {
            const auto& d = gens[static_cast<std::size_t>(rng.integer(0, static_cast<int>(gens.size()) - 1))].derivation;
            Poly p = rng.poly(3), q = rng.poly(3);
            EXPECT_EQ(apply(d, p * q, alg), alg.normal_form(apply(d, p, alg) * q + p * apply(d, q, alg)));
            // well defined on A
            EXPECT_EQ(apply(d, p + q * alg.f(), alg), apply(d, p, alg));
        }
    }
}

TEST(Bracket, LieIdentities) {
    fixtures::Random rng(22);
    auto alg = fixtures::cubic();
    for (int k = 0; k < 15; ++k) {
        int e1 = rng.integer(0, 2), e2 = rng.integer(0, 2), e3 = rng.integer(0, 2);
        Derivation a = rng.derivation(alg, e1), b = rng.derivation(alg, e2), c = rng.derivation(alg, e3);
        EXPECT_EQ(bracket(a, b, alg), bracket(b, a, alg) * Rational(-1));
        Derivation jac = bracket(a, bracket(b, c, alg), alg) + bracket(b, bracket(c, a, alg), alg) +
                         bracket(c, bracket(a, b, alg), alg);
        EXPECT_TRUE(jac.is_zero());
        Derivation ab = bracket(a, b, alg);
        EXPECT_TRUE(is_tangent(ab, alg));
        if (!ab.is_zero())
            EXPECT_EQ(internal_degree(ab, alg), e1 + e2);
        // Euler acts on a degree-e derivation by e
        EXPECT_EQ(bracket(euler_derivation(alg), a, alg), a * Rational(e1));
    }
}

TEST(Euler, ActsByDegree) {
    fixtures::Random rng(23);
    auto alg = fixtures::e8();
    Derivation eu = euler_derivation(alg);
    for (int e = 0; e <= 40; e += 3) {
        Poly p = rng.homogeneous(alg, e);
        EXPECT_EQ(apply(eu, p, alg), p * Rational(e));
    }
}

TEST(DerGradedBasis, MatchesMilnorAlgebraCount) {
    for (const auto& alg : {fixtures::cubic(), fixtures::e8()}) {
        int lo = alg.degree() == 3 ? -2 : -16;
        int hi = alg.degree() == 3 ? 4 : 32;
        for (int e = lo; e <= hi; ++e) {
            auto basis = der_graded_basis(alg, e);
            EXPECT_EQ(static_cast<long>(basis.size()), der_dimension_oracle(alg, e)) << "e=" << e;
            for (const auto& b : basis) {
                EXPECT_TRUE(is_tangent(b, alg));
                EXPECT_EQ(internal_degree(b, alg), e);
            }
        }
    }
}

TEST(DerGenerators, Degrees) {
    auto degrees = [](const std::vector<GradedDerivation>& g) {
        std::vector<int> out;
        for (const auto& x : g)
            out.push_back(x.degree);
        return out;
    };
    auto cubic = fixtures::cubic();
    EXPECT_EQ(degrees(der_generators(cubic, 2)), (std::vector<int>{0, 1, 1, 1}));
    EXPECT_EQ(degrees(der_generators(cubic, 6)), (std::vector<int>{0, 1, 1, 1}));
    auto only_euler = der_generators(cubic, 0);
    ASSERT_EQ(only_euler.size(), 1u);
    EXPECT_TRUE(der_generators(cubic, -1).empty());
    // Euler plus the three Hamiltonians of degree d - d_i - d_j
    EXPECT_EQ(degrees(der_generators(fixtures::e8(), 20)), (std::vector<int>{0, 5, 9, 14}));
}

TEST(DerGenerators, WeightsUnderAction) {
    auto gens = der_generators(fixtures::cubic(), fixtures::z3(), 6);
    std::vector<std::pair<int, int>> got;
    for (const auto& g : gens)
        got.emplace_back(g.degree, g.weight);
    EXPECT_EQ(got, (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 0}, {1, 1}}));
}

TEST(ExpressInGenerators, Recombines) {
    fixtures::Random rng(24);
    for (const auto& alg : {fixtures::cubic(), fixtures::e8()}) {
        auto gens = der_generators(alg, alg.degree());
        int hi = alg.degree() == 3 ? 5 : 40;
        for (int k = 0; k < 12; ++k) {
            Derivation d = rng.derivation(alg, rng.integer(0, hi)) + rng.derivation(alg, rng.integer(0, hi));
            auto c = express_in_generators(d, gens, alg, CyclicAction::trivial());
            EXPECT_EQ(combine(c, gens, alg), d);
        }
    }
}

TEST(ExpressInGenerators, OutOfSpanThrows) {
    auto alg = fixtures::cubic();
    auto gens = der_generators(alg, 0);
    EXPECT_THROW(express_in_generators(hamiltonian(alg, 0, 1), gens, alg, CyclicAction::trivial()), NotInSpanError);
}
