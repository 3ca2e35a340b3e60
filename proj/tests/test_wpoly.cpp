#include "support.hpp"

#include <gtest/gtest.h>

using namespace eqlr;

namespace {

// Coefficients of prod 1/(1 - t^w_i) times (1 - t^d), up to t^top.
std::vector<long> hilbert_series(const std::array<int, 3>& w, int d, int top) {
    std::vector<long> s(static_cast<std::size_t>(top) + 1, 0);
    s[0] = 1;
    for (int wi : w)
        for (int k = wi; k <= top; ++k)
            s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - wi)];
    for (int k = top; k >= d; --k)
        s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(k - d)];
    return s;
}

bool reduced(const Poly& p, const WeightedAlgebra& alg) {
    for (const auto& [m, c] : p.terms())
        if (!alg.is_reduced_monomial(m))
            return false;
    return true;
}

} // namespace

TEST(Parse, Examples) {
    Poly p = parse_poly("x1^3 + x2^3 + x3^3");
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.coefficient({3, 0, 0}), Rational(1));
    EXPECT_EQ(parse_poly("3/2*x1*x2 - x3"), Poly::monomial({1, 1, 0}, Rational(3, 2)) - Poly::variable(2));
    EXPECT_EQ(parse_poly("(x1 + x2)^2"), parse_poly("x1^2 + 2*x1*x2 + x2^2"));
    EXPECT_EQ(parse_poly("-(x1 - x1)"), Poly());
    EXPECT_EQ(parse_poly("  7 "), Poly(Rational(7)));
}

TEST(Parse, ErrorsCarryPositions) {
    try {
        parse_poly("x1^3 + 2 x2^3");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    try {
        parse_poly("x1 + y");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
        EXPECT_NE(e.detail().find("unknown identifier 'y'"), std::string::npos);
    }
    EXPECT_THROW(parse_poly(""), ParseError);
    EXPECT_THROW(parse_poly("(x1 + x2"), ParseError);
    EXPECT_THROW(parse_poly("x1/0"), ParseError);
    EXPECT_THROW(parse_poly("x1/x2"), ParseError);
    EXPECT_THROW(parse_poly("x1^"), ParseError);
}

TEST(Parse, PrintParseFixpoint) {
    fixtures::Random rng(11);
    for (int k = 0; k < 100; ++k) {
        Poly p = rng.poly(4);
        std::string s = to_string(p);
        EXPECT_EQ(parse_poly(s), p) << s;
        EXPECT_EQ(to_string(parse_poly(s)), s);
    }
}

TEST(WeightedDegree, Examples) {
    WeightSystem w{{15, 10, 6}, 30};
    EXPECT_EQ(weighted_degree({2, 0, 0}, w), 30);
    EXPECT_EQ(weighted_degree({0, 3, 0}, w), 30);
    EXPECT_EQ(weighted_degree({1, 1, 1}, w), 31);
    EXPECT_EQ(homogeneous_degree(parse_poly("x1^2 + x2^3 + x3^5"), w), 30);
    EXPECT_FALSE(homogeneous_degree(parse_poly("x1 + x2"), w));
}

TEST(Algebra, RejectsInhomogeneous) {
    EXPECT_THROW(WeightedAlgebra(parse_poly("x1^3 + x2^2"), {{1, 1, 1}, 3}), HomogeneityError);
    try {
        WeightedAlgebra(parse_poly("x1^3 + x2^2"), {{1, 1, 1}, 3});
    } catch (const HomogeneityError& e) {
        ASSERT_EQ(e.offending().size(), 1u);
        EXPECT_EQ(e.offending()[0], (Monomial{0, 2, 0}));
    }
    EXPECT_THROW(WeightedAlgebra(parse_poly("x1"), {{0, 1, 1}, 1}), ValidationError);
    EXPECT_EQ(fixtures::e8().canonical_shift(), -1);
    EXPECT_EQ(fixtures::cubic().canonical_shift(), 0);
}

TEST(NormalForm, Examples) {
    auto alg = fixtures::cubic();
    // leading monomial is x1^3, so x1^3 -> -x2^3 - x3^3
    EXPECT_EQ(alg.normal_form(parse_poly("x1^3")), parse_poly("-x2^3 - x3^3"));
    EXPECT_EQ(alg.normal_form(parse_poly("x1^4")), parse_poly("-x1*x2^3 - x1*x3^3"));
    EXPECT_TRUE(alg.normal_form(alg.f()).is_zero());
    EXPECT_EQ(alg.normal_form(parse_poly("x1^2*x2")), parse_poly("x1^2*x2"));
}

TEST(NormalForm, Properties) {
    fixtures::Random rng(12);
    for (const auto& alg : {fixtures::cubic(), fixtures::e8()}) {
        for (int k = 0; k < 40; ++k) {
            Poly a = rng.poly(5), b = rng.poly(5), g = rng.poly(3);
            Poly na = alg.normal_form(a);
            EXPECT_TRUE(reduced(na, alg));
            EXPECT_EQ(alg.normal_form(na), na);
            EXPECT_EQ(alg.normal_form(a + g * alg.f()), na);
            EXPECT_EQ(alg.normal_form(a + b), na + alg.normal_form(b));
            EXPECT_EQ(alg.normal_form(na * alg.normal_form(b)), alg.normal_form(a * b));
        }
    }
}

TEST(GradedBasis, MatchesHilbertSeries) {
    for (const auto& alg : {fixtures::cubic(), fixtures::e8()}) {
        const auto& w = alg.weights().var_weights;
        auto series = hilbert_series(w, alg.degree(), 70);
        for (int e = 0; e <= 70; ++e) {
            const auto& b = alg.graded_basis(e);
            EXPECT_EQ(static_cast<long>(b.size()), series[static_cast<std::size_t>(e)]) << "e=" << e;
            if (e <= 12)
                EXPECT_EQ(static_cast<long>(b.size()), fixtures::hilbert_coefficient(w, alg.degree(), e));
            for (const auto& m : b.monomials) {
                EXPECT_EQ(weighted_degree(m, alg.weights()), e);
                EXPECT_TRUE(alg.is_reduced_monomial(m));
            }
        }
        EXPECT_TRUE(alg.graded_basis(-1).monomials.empty());
    }
    EXPECT_EQ(fixtures::cubic().graded_basis(3).size(), 9u);
    EXPECT_EQ(fixtures::cubic().graded_basis(1).size(), 3u);
}

TEST(GradedBasis, ProductsStayInDegree) {
    fixtures::Random rng(13);
    auto alg = fixtures::e8();
    for (int k = 0; k < 30; ++k) {
        int e1 = rng.integer(0, 30), e2 = rng.integer(0, 30);
        Poly p = alg.normal_form(rng.homogeneous(alg, e1) * rng.homogeneous(alg, e2));
        if (!p.is_zero())
            EXPECT_EQ(homogeneous_degree(p, alg.weights()), e1 + e2);
    }
}
