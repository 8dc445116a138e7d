#pragma once

// Shared builders for the algebras used across the test suite.

#include "bihom/bihom.hpp"

#include <random>

namespace golden {

using namespace bihom;

inline BihomAssociativeAlgebra assoc2d(const Rational& m, const Rational& n) {
    return generate_example("assoc2d", {{"m", m}, {"n", n}}).as_associative();
}

/// Example-2.4 commutator algebra L(A); default parameters m=2, n=3.
inline BihomLieAlgebra la(const Rational& m = 2, const Rational& n = 3) {
    return commutator_bihom_lie(assoc2d(m, n));
}

/// sl(2) with the one-parameter twist maps still attached (pre-twist data).
inline AlgebraFile sl2_data(const Rational& k, const Rational& l) {
    return generate_example("sl2_twist", {{"k", k}, {"l", l}});
}

/// Yau twist of sl(2); default parameters k=1, l=2.
inline BihomLieAlgebra sl2_yau(const Rational& k = 1, const Rational& l = 2) {
    const AlgebraFile f = sl2_data(k, l);
    return yau_twist(f.tensor, f.alpha, f.beta);
}

/// Ordinary sl(2) as a Bihom-Lie algebra with identity twists.
inline BihomLieAlgebra sl2_classical() {
    const AlgebraFile f = sl2_data(0, 0);
    return f.as_lie();
}

inline BihomLieAlgebra abelian(std::size_t dim) {
    return generate_example("abelian", {{"dim", Rational(dim)}}).as_lie();
}

/// Solvable algebra [e1,e2] = e2, [e1,e3] = e3 with identity twists; its
/// trivial-representation complex has a compatible non-closed 2-cochain.
inline BihomLieAlgebra r3_solvable() {
    BihomLieAlgebra L{3, StructureTensor(3), Matrix::identity(3), Matrix::identity(3)};
    L.bracket.entry(0, 1, 1) = 1;
    L.bracket.entry(1, 0, 1) = -1;
    L.bracket.entry(0, 2, 2) = 1;
    L.bracket.entry(2, 0, 2) = -1;
    return L;
}

/// Deterministic small rationals for property-style tests.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Rational rational(int num_lo = -9, int num_hi = 9, int den_hi = 9) {
        std::uniform_int_distribution<int> num(num_lo, num_hi);
        std::uniform_int_distribution<int> den(1, den_hi);
        return Rational(num(gen_), den(gen_));
    }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
        return m;
    }

    Vec vec(std::size_t len) {
        Vec v(len);
        for (auto& x : v) x = rational();
        return v;
    }

    std::size_t index(std::size_t bound) {
        std::uniform_int_distribution<std::size_t> d(0, bound - 1);
        return d(gen_);
    }

private:
    std::mt19937 gen_;
};

} // namespace golden
