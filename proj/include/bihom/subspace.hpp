#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bihom/matrix.hpp"

namespace bihom {

/**
 * Linear subspace of K^n held as an RREF row basis. The basis rows are
 * nonzero, pivots are 1 with strictly increasing pivot columns, and every
 * pivot column is zero elsewhere. Two subspaces are equal exactly when their
 * representations are equal.
 */
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Row space of the given vectors, reduced to the canonical RREF basis.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
        for (const auto& v : vectors)
            if (v.size() != ambient_dim)
                throw DimensionMismatchError("Subspace::span: vector length != ambient dim");
        Matrix m(vectors.size(), ambient_dim);
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
        const RrefResult r = rref(std::move(m));
        Subspace s(ambient_dim);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) s.basis_.push_back(r.mat.row(i));
        return s;
    }

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i)
            s.basis_.push_back(unit_vec(ambient_dim, i));
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Exact membership: the residual after reduction against the basis is 0.
    bool contains(const Vec& v) const {
        if (v.size() != ambient_)
            throw DimensionMismatchError("Subspace::contains: vector length != ambient dim");
        Vec r = v;
        for (const auto& b : basis_) {
            const std::size_t p = pivot_of(b);
            if (r[p] != 0) r -= r[p] * b;
        }
        return is_zero(r);
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_)
            throw DimensionMismatchError("Subspace::contains: ambient dims differ");
        for (const auto& b : o.basis_)
            if (!contains(b)) return false;
        return true;
    }

private:
    static std::size_t pivot_of(const Vec& b) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        return p;
    }

    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatchError("subspace_sum: ambient dims differ");
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), all);
}

/// Intersection via the kernel of [Aᵀ | −Bᵀ]: a kernel element (y, z) gives
/// the common vector Aᵀy.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatchError("subspace_intersection: ambient dims differ");
    const std::size_t n = a.ambient_dim();
    const std::size_t p = a.dim(), q = b.dim();
    Matrix m(n, p + q);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = a.basis()[j][i];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, p + j) = -b.basis()[j][i];
    std::vector<Vec> members;
    for (const Vec& k : kernel_vectors(m)) {
        Vec x(n, Rational(0));
        for (std::size_t j = 0; j < p; ++j)
            if (k[j] != 0) x += k[j] * a.basis()[j];
        members.push_back(std::move(x));
    }
    return Subspace::span(n, members);
}

/// Kernel of a matrix as a canonical subspace of K^cols.
inline Subspace kernel_basis(const Matrix& m) {
    return Subspace::span(m.cols(), kernel_vectors(m));
}

/// Column space of a matrix as a subspace of K^rows.
inline Subspace image_basis(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return Subspace::span(m.rows(), cols);
}

} // namespace bihom
