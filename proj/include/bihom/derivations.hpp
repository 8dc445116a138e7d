#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

/// Column-major flattening of an n×n matrix into K^(n²): vec[col·n + row].
/// This is the fixed embedding used for every subspace of matrices, so
/// derivation spaces and degree-1 cochain coordinates line up entry for entry.
inline Vec flatten_col_major(const Matrix& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v[j * m.rows() + i] = m(i, j);
    return v;
}

inline Matrix unflatten_col_major(const Vec& v, std::size_t n) {
    if (v.size() != n * n)
        throw DimensionMismatchError("unflatten_col_major: length != n*n");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = v[j * n + i];
    return m;
}

/// α^k β^l as a single matrix. Negative exponents require the corresponding
/// twist to be bijective.
inline Matrix twist_power(const BihomLieAlgebra& L, long k, long l) {
    if (k < 0 && !is_invertible(L.alpha))
        throw NotRegularError("twist_power: alpha is singular, cannot take power " +
                              std::to_string(k));
    if (l < 0 && !is_invertible(L.beta))
        throw NotRegularError("twist_power: beta is singular, cannot take power " +
                              std::to_string(l));
    return matrix_power(L.alpha, k) * matrix_power(L.beta, l);
}

/// Linear map typed by its twist exponents; D is an α^k β^l-derivation
/// candidate (commutes with both twists and satisfies the twisted Leibniz rule).
struct TypedDerivation {
    long k = 0;
    long l = 0;
    Matrix D;
};

/// Direct residual test for membership in Der_{α^k β^l}(L).
inline bool is_derivation(const BihomLieAlgebra& L, const Matrix& D, long k, long l) {
    const std::size_t n = L.dim;
    if (D.rows() != n || D.cols() != n)
        throw DimensionMismatchError("is_derivation: matrix shape != dim");
    if (D * L.alpha != L.alpha * D) return false;
    if (D * L.beta != L.beta * D) return false;
    const Matrix T = twist_power(L, k, l);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = D.apply(L.bracket.of_basis(i, j));
            const Vec rhs = L.bracket_vec(D.col(i), T.col(j)) +
                            L.bracket_vec(T.col(i), D.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

/**
 * Der_{α^k β^l}(L) as an RREF subspace of K^(n²) under the column-major
 * flattening. The linear system over the n² entries of D stacks
 * Dα − αD = 0, Dβ − βD = 0 and the twisted Leibniz identity
 * D[e_i,e_j] = [D(e_i), α^kβ^l(e_j)] + [α^kβ^l(e_i), D(e_j)] on all basis
 * pairs.
 */
inline Subspace derivation_space(const BihomLieAlgebra& L, long k, long l) {
    const std::size_t n = L.dim;
    const Matrix T = twist_power(L, k, l);
    const std::size_t unknowns = n * n;
    auto at = [n](std::size_t row, std::size_t col) { return col * n + row; };

    std::vector<Vec> rows;
    // [D, M] = 0 as n² scalar equations, for M = α then β.
    for (const Matrix* M : {&L.alpha, &L.beta}) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Vec row(unknowns, Rational(0));
                for (std::size_t s = 0; s < n; ++s) {
                    row[at(r, s)] += (*M)(s, c); // (D M)(r,c)
                    row[at(s, c)] -= (*M)(r, s); // (M D)(r,c)
                }
                rows.push_back(std::move(row));
            }
    }
    // Leibniz rows: one equation per basis pair (i,j) and output coordinate r.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec cij = L.bracket.of_basis(i, j);
            for (std::size_t r = 0; r < n; ++r) {
                Vec row(unknowns, Rational(0));
                for (std::size_t s = 0; s < n; ++s) row[at(r, s)] += cij[s];
                for (std::size_t p = 0; p < n; ++p) {
                    Rational coef(0); // of D(p,i) from [D e_i, T e_j]
                    for (std::size_t q = 0; q < n; ++q)
                        if (T(q, j) != 0) coef += T(q, j) * L.bracket.entry(p, q, r);
                    row[at(p, i)] -= coef;
                }
                for (std::size_t q = 0; q < n; ++q) {
                    Rational coef(0); // of D(q,j) from [T e_i, D e_j]
                    for (std::size_t p = 0; p < n; ++p)
                        if (T(p, i) != 0) coef += T(p, i) * L.bracket.entry(p, q, r);
                    row[at(q, j)] -= coef;
                }
                rows.push_back(std::move(row));
            }
        }

    Matrix sys(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
    return kernel_basis(sys);
}

/// {u ∈ L : α(u) = u, β(u) = u}.
inline Subspace fixed_point_subspace(const BihomLieAlgebra& L) {
    const Matrix id = Matrix::identity(L.dim);
    return kernel_basis(Matrix::vstack(L.alpha - id, L.beta - id));
}

/**
 * Inn_{α^k β^l}(L): the span of the maps v ↦ −[α^{k−1}β^l(v), u] with u
 * running over a basis of the (α,β)-fixed subspace. Returned in RREF under
 * the column-major flattening.
 */
inline Subspace inner_derivation_space(const BihomLieAlgebra& L, long k, long l) {
    const std::size_t n = L.dim;
    const Matrix T = twist_power(L, k - 1, l);
    const Subspace fixed = fixed_point_subspace(L);
    std::vector<Vec> gens;
    for (const Vec& u : fixed.basis()) {
        Matrix m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            m.set_col(j, -L.bracket_vec(T.col(j), u));
        gens.push_back(flatten_col_major(m));
    }
    return Subspace::span(n * n, gens);
}

/// Commutator of typed derivations, typed at the summed exponents. The
/// commutator of an (k,l)- and an (s,t)-derivation is always a
/// (k+s,l+t)-derivation, so a membership failure signals an implementation
/// bug, not bad input.
inline TypedDerivation derivation_bracket(const BihomLieAlgebra& L,
                                          const TypedDerivation& d1,
                                          const TypedDerivation& d2) {
    TypedDerivation out{d1.k + d2.k, d1.l + d2.l, d1.D * d2.D - d2.D * d1.D};
    if (!is_derivation(L, out.D, out.k, out.l))
        throw InternalInvariantViolation(
            "derivation_bracket: commutator left Der_{alpha^" +
            std::to_string(out.k) + " beta^" + std::to_string(out.l) + "}");
    return out;
}

} // namespace bihom
