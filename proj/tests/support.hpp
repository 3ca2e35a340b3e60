#pragma once

#include "eqlr/conn.hpp"
#include "eqlr/equiv.hpp"
#include "eqlr/poly_io.hpp"

#include <random>

namespace fixtures {

using namespace eqlr;

inline WeightedAlgebra cubic() { return WeightedAlgebra(parse_poly("x1^3 + x2^3 + x3^3"), {{1, 1, 1}, 3}); }
inline WeightedAlgebra e8() { return WeightedAlgebra(parse_poly("x1^2 + x2^3 + x3^5"), {{15, 10, 6}, 30}); }
inline CyclicAction z3() { return CyclicAction::make(3, {1, 1, 2}); }

inline const LieRinehartComplex& cubic_complex() {
    static const LieRinehartComplex cx(cubic(), CyclicAction::trivial(), 6);
    return cx;
}

inline const LieRinehartComplex& cubic_z3_complex() {
    static const LieRinehartComplex cx(cubic(), z3(), 6);
    return cx;
}

inline const LieRinehartComplex& e8_complex() {
    static const LieRinehartComplex cx(e8(), CyclicAction::trivial(), 60);
    return cx;
}

class Random {
public:
    explicit Random(unsigned seed = 20261015u) : gen_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational rational() {
        int num = integer(-9, 9);
        int den = integer(1, 4);
        return Rational(num, den);
    }

    Rational nonzero_rational() {
        Rational q;
        while (q.is_zero())
            q = rational();
        return q;
    }

    Vector vector(std::size_t n) {
        Vector v(n);
        for (auto& q : v)
            q = rational();
        return v;
    }

    /// Random combination of a list of basis vectors.
    Vector combination(const std::vector<Vector>& basis, std::size_t dim) {
        Vector v(dim);
        for (const auto& b : basis) {
            Rational c = rational();
            for (std::size_t i = 0; i < dim; ++i)
                v[i] += c * b[i];
        }
        return v;
    }

    /// Random reduced element of A_e.
    Poly homogeneous(const WeightedAlgebra& alg, int e, int terms = 4) {
        Poly p;
        const auto& basis = alg.graded_basis(e).monomials;
        if (basis.empty())
            return p;
        for (int k = 0; k < terms; ++k)
            p.add_term(basis[static_cast<std::size_t>(integer(0, static_cast<int>(basis.size()) - 1))], rational());
        return p;
    }

    /// Random polynomial (not reduced, not homogeneous) of total degree <= deg.
    Poly poly(int deg, int terms = 5) {
        Poly p;
        for (int k = 0; k < terms; ++k) {
            Monomial m{integer(0, deg), integer(0, deg), integer(0, deg)};
            p.add_term(m, rational());
        }
        return p;
    }

    /// Random homogeneous derivation of degree e (a combination of a graded basis).
    Derivation derivation(const WeightedAlgebra& alg, int e) {
        Derivation d;
        for (const auto& b : der_graded_basis(alg, e)) {
            Derivation t = b;
            t *= rational();
            d += t;
        }
        return d;
    }

    Cochain cochain(const LieRinehartComplex& cx, int n, int e, std::optional<int> t = std::nullopt) {
        auto space = cx.cochain_space(n, e, t);
        return cx.cochain(*space, combination(space->basis, space->layout.dimension()));
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

/// Brute-force dimension of A_e: count exponent vectors of weighted degree e
/// minus those of degree e - d (multiples of f), valid for a single relation.
inline long hilbert_coefficient(const std::array<int, 3>& w, int d, int e) {
    auto count = [&w](int deg) {
        if (deg < 0)
            return 0L;
        long c = 0;
        for (int a = 0; a * w[0] <= deg; ++a)
            for (int b = 0; a * w[0] + b * w[1] <= deg; ++b)
                if ((deg - a * w[0] - b * w[1]) % w[2] == 0)
                    ++c;
        return c;
    };
    return count(e) - count(e - d);
}

} // namespace fixtures
