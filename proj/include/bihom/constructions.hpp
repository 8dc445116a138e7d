#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/representation.hpp"

namespace bihom {

namespace detail {

inline void verify_construction(const BihomLieAlgebra& L, const char* who) {
    if (!check_bihom_lie(L).lie_axioms_pass())
        throw InternalInvariantViolation(std::string(who) +
                                         ": constructed algebra fails the axioms");
}

} // namespace detail

/**
 * Commutator Bihom-Lie algebra L(A) of a Bihom-associative algebra with
 * bijective twists: [a,a'] = aa' − (α^{-1}β(a'))(αβ^{-1}(a)), twists carried
 * over unchanged.
 */
inline BihomLieAlgebra commutator_bihom_lie(const BihomAssociativeAlgebra& A) {
    const AssocAxiomReport rep = check_bihom_associative(A);
    if (!rep.axioms_pass())
        throw InvalidInputError(
            "commutator_bihom_lie: input fails the Bihom-associative axioms");
    if (!check_regular(A).ok())
        throw NotRegularError("commutator_bihom_lie: twists must be bijective");
    const std::size_t n = A.dim;
    const Matrix ainv_b = invert(A.alpha) * A.beta;
    const Matrix a_binv = A.alpha * invert(A.beta);
    BihomLieAlgebra L{n, StructureTensor(n), A.alpha, A.beta};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            L.bracket.set_basis(i, j,
                                A.product.of_basis(i, j) -
                                    A.product_vec(ainv_b.col(j), a_binv.col(i)));
    detail::verify_construction(L, "commutator_bihom_lie");
    return L;
}

/**
 * Yau twist of an ordinary Lie algebra along two commuting multiplicative
 * endomorphisms: {a,b} = [α(a), β(b)]. The Lie axioms of the input and the
 * preconditions on the maps are checked and failures name the culprit.
 */
inline BihomLieAlgebra yau_twist(const StructureTensor& lie_bracket,
                                 const Matrix& alpha, const Matrix& beta) {
    const std::size_t n = lie_bracket.dim();
    if (alpha.rows() != n || alpha.cols() != n || beta.rows() != n || beta.cols() != n)
        throw DimensionMismatchError("yau_twist: twist shape != dim");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!is_zero(lie_bracket.of_basis(i, j) + lie_bracket.of_basis(j, i)))
                throw InvalidInputError("yau_twist: input bracket is not antisymmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec jac =
                    lie_bracket.apply(unit_vec(n, i), lie_bracket.of_basis(j, k)) +
                    lie_bracket.apply(unit_vec(n, j), lie_bracket.of_basis(k, i)) +
                    lie_bracket.apply(unit_vec(n, k), lie_bracket.of_basis(i, j));
                if (!is_zero(jac))
                    throw InvalidInputError("yau_twist: input bracket fails the Jacobi "
                                            "identity at (" + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(k) + ")");
            }
    if (alpha * beta != beta * alpha)
        throw InvalidInputError("yau_twist: twist maps do not commute");
    if (!detail::map_is_multiplicative(lie_bracket, alpha).first)
        throw InvalidInputError("yau_twist: alpha is not multiplicative for the input bracket");
    if (!detail::map_is_multiplicative(lie_bracket, beta).first)
        throw InvalidInputError("yau_twist: beta is not multiplicative for the input bracket");

    BihomLieAlgebra L{n, StructureTensor(n), alpha, beta};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            L.bracket.set_basis(i, j, lie_bracket.apply(alpha.col(i), beta.col(j)));
    detail::verify_construction(L, "yau_twist");
    return L;
}

/// Direct sum with componentwise bracket and block-diagonal twists.
inline BihomLieAlgebra direct_sum(const BihomLieAlgebra& L1, const BihomLieAlgebra& L2) {
    if (!check_bihom_lie(L1).lie_axioms_pass() || !check_bihom_lie(L2).lie_axioms_pass())
        throw InvalidInputError("direct_sum: a summand fails the Bihom-Lie axioms");
    const std::size_t n = L1.dim, m = L2.dim;
    BihomLieAlgebra L{n + m, StructureTensor(n + m),
                      Matrix::block_diag(L1.alpha, L2.alpha),
                      Matrix::block_diag(L1.beta, L2.beta)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                L.bracket.entry(i, j, k) = L1.bracket.entry(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                L.bracket.entry(n + i, n + j, n + k) = L2.bracket.entry(i, j, k);
    detail::verify_construction(L, "direct_sum");
    return L;
}

/**
 * Semidirect product L ⋉ M along a representation:
 * [(x,a),(y,b)] = ([x,y], ρ(x)(b) − ρ(α^{-1}β(y))(α_M β_M^{-1}(a))),
 * twists α⊕α_M and β⊕β_M. Needs α and β_M bijective.
 */
inline BihomLieAlgebra semidirect_product(const BihomLieAlgebra& L,
                                          const Representation& rep) {
    if (!(rep.algebra == L))
        throw InvalidInputError("semidirect_product: representation was built on a "
                                "different algebra");
    if (!check_representation(rep).all_pass())
        throw InvalidRepresentationError(
            "semidirect_product: representation fails the compatibility identities");
    if (!is_invertible(L.alpha) || !is_invertible(rep.beta_m))
        throw NotRegularError("semidirect_product: alpha and beta_M must be bijective");
    const std::size_t n = L.dim, m = rep.mdim;
    const Matrix ainv_b = invert(L.alpha) * L.beta;
    const Matrix am_bminv = rep.alpha_m * invert(rep.beta_m);

    BihomLieAlgebra S{n + m, StructureTensor(n + m),
                      Matrix::block_diag(L.alpha, rep.alpha_m),
                      Matrix::block_diag(L.beta, rep.beta_m)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                S.bracket.entry(i, j, k) = L.bracket.entry(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            // [e_i, f_b] = ρ(e_i)(f_b);  [f_b, e_i] = −ρ(α^{-1}β(e_i))(α_M β_M^{-1}(f_b))
            const Vec fwd = rep.rho[i].col(b);
            const Vec bwd = -rep.rho_of(ainv_b.col(i)).apply(am_bminv.col(b));
            for (std::size_t r = 0; r < m; ++r) {
                S.bracket.entry(i, n + b, n + r) = fwd[r];
                S.bracket.entry(n + b, i, n + r) = bwd[r];
            }
        }
    detail::verify_construction(S, "semidirect_product");
    return S;
}

/**
 * Derivation extension L ⊕ K·D with [u,v]_D = [u,v], [D,u]_D = D(u),
 * [u,D]_D = −αβ^{-1}D(u), [D,D]_D = 0, twists fixing the D-direction.
 * No validity guarantee: the extension is a Bihom-Lie algebra exactly when D
 * is an α⁰β¹-derivation, and the caller decides what to do with the report.
 */
inline BihomLieAlgebra derivation_extension(const BihomLieAlgebra& L, const Matrix& D) {
    const std::size_t n = L.dim;
    if (D.rows() != n || D.cols() != n)
        throw DimensionMismatchError("derivation_extension: matrix shape != dim");
    if (!is_invertible(L.alpha) || !is_invertible(L.beta))
        throw NotRegularError("derivation_extension: algebra must be regular");
    const Matrix a_binv_D = L.alpha * invert(L.beta) * D;

    BihomLieAlgebra E{n + 1, StructureTensor(n + 1),
                      Matrix::block_diag(L.alpha, Matrix::identity(1)),
                      Matrix::block_diag(L.beta, Matrix::identity(1))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                E.bracket.entry(i, j, k) = L.bracket.entry(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            E.bracket.entry(n, i, k) = D(k, i);
            E.bracket.entry(i, n, k) = -a_binv_D(k, i);
        }
    return E;
}

/// Antisymmetric bilinear form θ on L with coefficient matrix
/// θ(e_i, e_j) = theta(i,j).
struct ExtensionCocycle {
    Matrix theta;

    Rational value(const Vec& x, const Vec& y) const {
        Rational out(0);
        const Vec ty = theta.apply(y);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) out += x[i] * ty[i];
        return out;
    }
};

namespace detail {

inline void require_compatible_cocycle(const BihomLieAlgebra& L,
                                       const ExtensionCocycle& theta) {
    const Matrix& t = theta.theta;
    if (t.rows() != L.dim || t.cols() != L.dim)
        throw DimensionMismatchError("cocycle shape != algebra dim");
    if (t != -t.transpose())
        throw InvalidCocycleError("theta is not antisymmetric");
    if (L.alpha.transpose() * t * L.alpha != t)
        throw InvalidCocycleError("theta is not alpha-compatible");
    if (L.beta.transpose() * t * L.beta != t)
        throw InvalidCocycleError("theta is not beta-compatible");
}

} // namespace detail

/**
 * Central extension g = L ⊕ K with
 * [(u,s),(v,t)]_θ = ([u,v], θ(αβ^{-1}(u), v)) and twists fixing the last
 * coordinate. θ must be antisymmetric and (α,β)-compatible; this is checked
 * eagerly. Validity of the result is equivalent to d_T θ = 0 and is left to
 * the caller.
 */
inline BihomLieAlgebra central_extension(const BihomLieAlgebra& L,
                                         const ExtensionCocycle& theta) {
    if (!is_invertible(L.alpha) || !is_invertible(L.beta))
        throw NotRegularError("central_extension: algebra must be regular");
    if (!check_multiplicative(L).ok())
        throw InvalidInputError("central_extension: algebra must be multiplicative");
    detail::require_compatible_cocycle(L, theta);
    const std::size_t n = L.dim;
    const Matrix a_binv = L.alpha * invert(L.beta);

    BihomLieAlgebra E{n + 1, StructureTensor(n + 1),
                      Matrix::block_diag(L.alpha, Matrix::identity(1)),
                      Matrix::block_diag(L.beta, Matrix::identity(1))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                E.bracket.entry(i, j, k) = L.bracket.entry(i, j, k);
            E.bracket.entry(i, j, n) = theta.value(a_binv.col(i), unit_vec(n, j));
        }
    return E;
}

/// d_T f of a linear form f as the antisymmetric coefficient matrix
/// (d_T f)(e_i, e_j) = f([α^{-1}β(e_i), e_j]).
inline Matrix coboundary_of_linear_form(const BihomLieAlgebra& L, const Vec& f) {
    if (f.size() != L.dim)
        throw DimensionMismatchError("coboundary_of_linear_form: form length != dim");
    if (!is_invertible(L.alpha))
        throw NotRegularError("coboundary_of_linear_form: alpha must be bijective");
    const std::size_t n = L.dim;
    const Matrix ainv_b = invert(L.alpha) * L.beta;
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec w = L.bracket_vec(ainv_b.col(i), unit_vec(n, j));
            Rational v(0);
            for (std::size_t p = 0; p < n; ++p)
                if (w[p] != 0) v += f[p] * w[p];
            out(i, j) = v;
        }
    return out;
}

/**
 * Isomorphism φ(u,s) = (u, s − f(u)) between the central extensions by θ1
 * and θ2 when θ1 − θ2 = d_T f with f a compatible linear form. Throws
 * NotCohomologousError when the supplied f does not realize the difference.
 */
inline AlgebraMorphism extension_isomorphism(const BihomLieAlgebra& L,
                                             const ExtensionCocycle& theta1,
                                             const ExtensionCocycle& theta2,
                                             const Vec& f) {
    if (f.size() != L.dim)
        throw DimensionMismatchError("extension_isomorphism: form length != dim");
    const std::size_t n = L.dim;
    Vec fa(n), fb(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational va(0), vb(0);
        for (std::size_t i = 0; i < n; ++i) {
            va += f[i] * L.alpha(i, j);
            vb += f[i] * L.beta(i, j);
        }
        fa[j] = va;
        fb[j] = vb;
    }
    if (fa != f || fb != f)
        throw NotCohomologousError(
            "extension_isomorphism: f is not a compatible 1-cochain (f∘α = f = f∘β fails)");
    if (theta1.theta - theta2.theta != coboundary_of_linear_form(L, f))
        throw NotCohomologousError(
            "extension_isomorphism: theta1 - theta2 != d_T f for the supplied f");

    AlgebraMorphism phi;
    phi.source = central_extension(L, theta1);
    phi.target = central_extension(L, theta2);
    phi.map = Matrix::identity(n + 1);
    for (std::size_t j = 0; j < n; ++j) phi.map(n, j) = -f[j];
    return phi;
}

} // namespace bihom
