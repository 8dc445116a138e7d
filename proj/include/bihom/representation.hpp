#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/derivations.hpp"

namespace bihom {

/**
 * Representation (M, ρ, α_M, β_M) of a Bihom-Lie algebra: a module of
 * dimension mdim with commuting twists and action matrices rho[i] = ρ(e_i)
 * satisfying
 *   ρ(α(x))∘α_M = α_M∘ρ(x),
 *   ρ(β(x))∘β_M = β_M∘ρ(x),
 *   ρ([β(x),y])∘β_M = ρ(αβ(x))∘ρ(y) − ρ(β(y))∘ρ(α(x)).
 */
struct Representation {
    BihomLieAlgebra algebra;
    std::size_t mdim = 0;
    std::vector<Matrix> rho; // one mdim×mdim matrix per algebra basis vector
    Matrix alpha_m;
    Matrix beta_m;

    /// Linear extension ρ(x) = Σ x_i ρ(e_i).
    Matrix rho_of(const Vec& x) const {
        Matrix r(mdim, mdim);
        for (std::size_t i = 0; i < algebra.dim; ++i)
            if (x[i] != 0) r = r + x[i] * rho[i];
        return r;
    }
};

struct RepresentationReport {
    bool commuting_module_twists = false;
    bool alpha_compatible = false; // ρ(α(x))∘α_M = α_M∘ρ(x)
    bool beta_compatible = false;  // ρ(β(x))∘β_M = β_M∘ρ(x)
    bool action_identity = false;  // the bracket-action identity
    std::optional<std::size_t> single_witness;
    std::optional<PairWitness> pair_witness;

    bool all_pass() const {
        return commuting_module_twists && alpha_compatible && beta_compatible &&
               action_identity;
    }
};

/// Scans the three defining identities on basis elements and pairs.
inline RepresentationReport check_representation(const Representation& rep) {
    const std::size_t n = rep.algebra.dim;
    RepresentationReport r;
    if (rep.rho.size() != n || rep.alpha_m.rows() != rep.mdim ||
        rep.alpha_m.cols() != rep.mdim || rep.beta_m.rows() != rep.mdim ||
        rep.beta_m.cols() != rep.mdim)
        throw DimensionMismatchError("check_representation: shape mismatch");
    for (const auto& m : rep.rho)
        if (m.rows() != rep.mdim || m.cols() != rep.mdim)
            throw DimensionMismatchError("check_representation: rho shape mismatch");

    r.commuting_module_twists = (rep.alpha_m * rep.beta_m == rep.beta_m * rep.alpha_m);

    r.alpha_compatible = r.beta_compatible = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (rep.rho_of(rep.algebra.alpha.col(i)) * rep.alpha_m !=
            rep.alpha_m * rep.rho[i]) {
            r.alpha_compatible = false;
            if (!r.single_witness) r.single_witness = i;
        }
        if (rep.rho_of(rep.algebra.beta.col(i)) * rep.beta_m !=
            rep.beta_m * rep.rho[i]) {
            r.beta_compatible = false;
            if (!r.single_witness) r.single_witness = i;
        }
    }

    r.action_identity = true;
    const Matrix ab = rep.algebra.alpha * rep.algebra.beta;
    for (std::size_t i = 0; i < n && r.action_identity; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix lhs =
                rep.rho_of(rep.algebra.bracket_vec(rep.algebra.beta.col(i),
                                                   unit_vec(n, j))) *
                rep.beta_m;
            const Matrix rhs = rep.rho_of(ab.col(i)) * rep.rho[j] -
                               rep.rho_of(rep.algebra.beta.col(j)) *
                                   rep.rho_of(rep.algebra.alpha.col(i));
            if (lhs != rhs) {
                r.action_identity = false;
                r.pair_witness = PairWitness{i, j, {}};
                break;
            }
        }
    return r;
}

/// One-dimensional module with ρ = 0 and both module twists equal to 1.
inline Representation trivial_representation(const BihomLieAlgebra& L) {
    Representation rep;
    rep.algebra = L;
    rep.mdim = 1;
    rep.rho.assign(L.dim, Matrix(1, 1));
    rep.alpha_m = Matrix::identity(1);
    rep.beta_m = Matrix::identity(1);
    return rep;
}

/**
 * α^s β^t-adjoint representation ad_{s,t}(u) = [α^s β^t(u), ·] on M = L with
 * module twists α, β. Requires L regular and multiplicative; the result is
 * revalidated and a failure raises InternalInvariantViolation.
 */
inline Representation adjoint_representation(const BihomLieAlgebra& L, long s, long t) {
    if (!is_invertible(L.alpha) || !is_invertible(L.beta))
        throw NotRegularError("adjoint_representation: twists must be bijective");
    if (!check_multiplicative(L).ok())
        throw InvalidInputError("adjoint_representation: twists must be multiplicative");
    const std::size_t n = L.dim;
    const Matrix T = twist_power(L, s, t);
    Representation rep;
    rep.algebra = L;
    rep.mdim = n;
    rep.alpha_m = L.alpha;
    rep.beta_m = L.beta;
    rep.rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            m.set_col(j, L.bracket_vec(T.col(i), unit_vec(n, j)));
        rep.rho.push_back(std::move(m));
    }
    if (!check_representation(rep).all_pass())
        throw InternalInvariantViolation(
            "adjoint_representation: constructed action fails the "
            "representation identities");
    return rep;
}

} // namespace bihom
