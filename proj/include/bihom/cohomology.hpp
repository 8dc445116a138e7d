#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/representation.hpp"

namespace bihom {

/// All strictly increasing k-element index tuples from {0,…,n−1}, in
/// lexicographic order. This order, refined by the module basis index, fixes
/// the ambient coordinate system for every cochain matrix in the library.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // advance to the next increasing tuple
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++cur[pos - 1];
        for (std::size_t i = pos; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    if (k == 0) out.assign(1, {});
    return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

namespace detail {

/// Lexicographic rank of an increasing tuple among all k-subsets of {0..n−1}.
inline std::size_t subset_rank(const std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    std::size_t r = 0, prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = prev; v < s[i]; ++v) r += binomial(n - v - 1, k - i - 1);
        prev = s[i] + 1;
    }
    return r;
}

} // namespace detail

/**
 * Antisymmetric multilinear evaluation of a k-cochain given by its ambient
 * coordinates. coords has length C(n,k)·m, indexed by (subset rank)·m + b.
 * Arguments are arbitrary coordinate vectors; the value expands over all
 * index tuples, dropping repeats and sorting with the permutation sign.
 */
inline Vec eval_cochain(const Vec& coords, std::size_t n, std::size_t m,
                        const std::vector<Vec>& args) {
    const std::size_t k = args.size();
    Vec out(m, Rational(0));
    if (k == 0) {
        for (std::size_t b = 0; b < m; ++b) out[b] = coords[b];
        return out;
    }
    std::vector<std::size_t> chosen(k);
    auto rec = [&](auto&& self, std::size_t pos, const Rational& coef) -> void {
        if (pos == k) {
            std::vector<std::size_t> sorted = chosen;
            int sign = 1;
            for (std::size_t i = 1; i < k; ++i) { // insertion sort, counting swaps
                std::size_t j = i;
                while (j > 0 && sorted[j - 1] > sorted[j]) {
                    std::swap(sorted[j - 1], sorted[j]);
                    sign = -sign;
                    --j;
                }
            }
            const std::size_t base = detail::subset_rank(sorted, n) * m;
            for (std::size_t b = 0; b < m; ++b)
                if (coords[base + b] != 0) out[b] += sign * coef * coords[base + b];
            return;
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (args[pos][t] == 0) continue;
            bool dup = false;
            for (std::size_t q = 0; q < pos; ++q)
                if (chosen[q] == t) { dup = true; break; }
            if (dup) continue;
            chosen[pos] = t;
            self(self, pos + 1, coef * args[pos][t]);
        }
    };
    rec(rec, 0, Rational(1));
    return out;
}

/// Basis data for the degree-k compatible cochains
/// C^k = {f : α_M∘f = f∘α^(×k), β_M∘f = f∘β^(×k)}.
struct CochainBasis {
    std::size_t degree = 0;
    std::size_t ambient_dim = 0;
    Subspace compatible;
};

/// Coboundary d_ρ at degree k as a matrix from ambient degree-k coordinates
/// to ambient degree-(k+1) coordinates.
struct CoboundaryMap {
    std::size_t degree = 0;
    Matrix matrix;
};

namespace detail {

inline void require_degree(const Representation& rep, long k) {
    if (k < 0 || static_cast<std::size_t>(k) > rep.algebra.dim)
        throw DegreeOutOfRangeError("degree " + std::to_string(k) +
                                    " outside 0.." + std::to_string(rep.algebra.dim));
}

inline void require_regular(const BihomLieAlgebra& L, const char* who) {
    if (!is_invertible(L.alpha) || !is_invertible(L.beta))
        throw NotRegularError(std::string(who) + ": algebra twists must be bijective");
}

} // namespace detail

/**
 * Compatible k-cochain space. Degree 0 is the (α_M, β_M)-fixed subspace of
 * the module; for k ≥ 1 the compatibility conditions are assembled
 * column-by-column on the ambient basis and the kernel is returned.
 */
inline CochainBasis cochain_space(const Representation& rep, long k) {
    detail::require_degree(rep, k);
    const std::size_t n = rep.algebra.dim, m = rep.mdim;
    const std::size_t kk = static_cast<std::size_t>(k);
    CochainBasis cb;
    cb.degree = kk;
    cb.ambient_dim = binomial(n, kk) * m;
    if (kk == 0) {
        const Matrix id = Matrix::identity(m);
        cb.compatible = kernel_basis(
            Matrix::vstack(rep.alpha_m - id, rep.beta_m - id));
        return cb;
    }
    const auto Ss = index_subsets(n, kk);
    const std::size_t dim = cb.ambient_dim;
    Matrix op(2 * dim, dim);
    for (std::size_t colS = 0; colS < Ss.size(); ++colS)
        for (std::size_t b = 0; b < m; ++b) {
            const std::size_t col = colS * m + b;
            Vec coords(dim, Rational(0));
            coords[col] = 1;
            for (std::size_t rowS = 0; rowS < Ss.size(); ++rowS) {
                std::vector<Vec> argsA, argsB;
                for (std::size_t s : Ss[rowS]) {
                    argsA.push_back(rep.algebra.alpha.col(s));
                    argsB.push_back(rep.algebra.beta.col(s));
                }
                Vec direct(m, Rational(0));
                if (rowS == colS) direct[b] = 1;
                const Vec ra = rep.alpha_m.apply(direct) - eval_cochain(coords, n, m, argsA);
                const Vec rb = rep.beta_m.apply(direct) - eval_cochain(coords, n, m, argsB);
                for (std::size_t r = 0; r < m; ++r) {
                    op(rowS * m + r, col) = ra[r];
                    op(dim + rowS * m + r, col) = rb[r];
                }
            }
        }
    cb.compatible = kernel_basis(op);
    return cb;
}

/**
 * Generic coboundary operator of the representation,
 *
 *   d_ρ f(u_1,…,u_{k+1}) = Σ_i (−1)^i ρ(αβ^{k−1}(u_i)) f(u_1,…,û_i,…,u_{k+1})
 *     + Σ_{i<j} (−1)^{i+j+1} f([α^{-1}β(u_i),u_j], β(u_1),…,û_i,…,û_j,…,β(u_{k+1})),
 *
 * assembled on each increasing (k+1)-tuple of basis vectors. Requires the
 * algebra to be regular (α^{-1} throughout and β^{-1} at degree 0).
 */
inline CoboundaryMap coboundary_matrix(const Representation& rep, long k) {
    detail::require_degree(rep, k);
    detail::require_regular(rep.algebra, "coboundary_matrix");
    const std::size_t n = rep.algebra.dim, m = rep.mdim;
    const std::size_t kk = static_cast<std::size_t>(k);
    const auto Ss = index_subsets(n, kk);
    const auto Us = index_subsets(n, kk + 1);
    const std::size_t src = binomial(n, kk) * m;
    const std::size_t dst = binomial(n, kk + 1) * m;
    const Matrix rho_arg = rep.algebra.alpha * matrix_power(rep.algebra.beta,
                                                            static_cast<long>(kk) - 1);
    const Matrix ainv_b = invert(rep.algebra.alpha) * rep.algebra.beta;

    CoboundaryMap d;
    d.degree = kk;
    d.matrix = Matrix(dst, src);
    for (std::size_t colS = 0; colS < Ss.size(); ++colS)
        for (std::size_t b = 0; b < m; ++b) {
            const std::size_t col = colS * m + b;
            Vec coords(src, Rational(0));
            coords[col] = 1;
            for (std::size_t rowU = 0; rowU < Us.size(); ++rowU) {
                const auto& U = Us[rowU];
                Vec val(m, Rational(0));
                for (std::size_t i = 0; i < kk + 1; ++i) {
                    std::vector<std::size_t> rest;
                    for (std::size_t a = 0; a < kk + 1; ++a)
                        if (a != i) rest.push_back(U[a]);
                    Vec fval(m, Rational(0));
                    if (kk == 0) {
                        fval[b] = 1;
                    } else {
                        const std::size_t base = detail::subset_rank(rest, n) * m;
                        for (std::size_t r = 0; r < m; ++r) fval[r] = coords[base + r];
                    }
                    Vec term = rep.rho_of(rho_arg.col(U[i])).apply(fval);
                    if (i % 2 == 0) term = -term; // (−1)^i with 1-based i
                    val += term;
                }
                for (std::size_t i = 0; i < kk + 1 && kk > 0; ++i)
                    for (std::size_t j = i + 1; j < kk + 1; ++j) {
                        std::vector<Vec> args;
                        args.push_back(rep.algebra.bracket_vec(ainv_b.col(U[i]),
                                                               unit_vec(n, U[j])));
                        for (std::size_t a = 0; a < kk + 1; ++a)
                            if (a != i && a != j)
                                args.push_back(rep.algebra.beta.col(U[a]));
                        Vec term = eval_cochain(coords, n, m, args);
                        if ((i + j) % 2 == 0) term = -term; // (−1)^{i+j+1}, 1-based
                        val += term;
                    }
                for (std::size_t r = 0; r < m; ++r) d.matrix(rowU * m + r, col) = val[r];
            }
        }
    return d;
}

struct CohomologyResult {
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
    Subspace cocycles;      // Z^k, in ambient degree-k coordinates
    Subspace coboundaries;  // B^k
};

/**
 * H^k = Z^k / B^k for the given representation: Z^k is the kernel of d_ρ
 * restricted to the compatible subspace, B^k the image of the degree-(k−1)
 * compatible subspace (zero at k = 0). B ⊆ Z is verified.
 */
inline CohomologyResult cohomology(const Representation& rep, long k) {
    detail::require_degree(rep, k);
    detail::require_regular(rep.algebra, "cohomology");
    const CochainBasis ck = cochain_space(rep, k);
    const CoboundaryMap dk = coboundary_matrix(rep, k);

    CohomologyResult res;
    res.cocycles = subspace_intersection(ck.compatible, kernel_basis(dk.matrix));
    if (k == 0) {
        res.coboundaries = Subspace::zero(ck.ambient_dim);
    } else {
        const CochainBasis cprev = cochain_space(rep, k - 1);
        const CoboundaryMap dprev = coboundary_matrix(rep, k - 1);
        std::vector<Vec> images;
        for (const Vec& f : cprev.compatible.basis())
            images.push_back(dprev.matrix.apply(f));
        res.coboundaries = Subspace::span(ck.ambient_dim, images);
    }
    if (!res.cocycles.contains(res.coboundaries))
        throw InternalInvariantViolation("cohomology: B^k is not contained in Z^k");
    res.dim_cocycles = res.cocycles.dim();
    res.dim_coboundaries = res.coboundaries.dim();
    res.dim_cohomology = res.dim_cocycles - res.dim_coboundaries;
    return res;
}

} // namespace bihom
