#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec& operator+=(Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec& operator-=(Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }

inline Vec operator*(const Rational& c, Vec v) {
    for (auto& x : v) x *= c;
    return v;
}

inline Vec operator-(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

/// Standard basis vector e_i of the given length.
inline Vec unit_vec(std::size_t len, std::size_t i) {
    Vec v(len, Rational(0));
    v.at(i) = 1;
    return v;
}

/**
 * Dense matrix over the rationals, row-major. All operations are exact;
 * there is no floating point anywhere in this library.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    /// Builds from nested initializer lists of integers or rationals.
    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    friend Matrix operator*(const Rational& c, Matrix m) {
        for (auto& x : m.e_) x *= c;
        return m;
    }

    /// Applies the matrix to a coordinate column.
    Vec apply(const Vec& v) const {
        assert(v.size() == cols_);
        Vec r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const Vec& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    /// Stacks rows of `a` on top of rows of `b` (equal column counts).
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_);
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots; // pivot columns, strictly increasing
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination. The result is
/// the unique RREF of the input.
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(lead, piv);
        const Rational inv = Rational(1) / m(lead, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of the right nullspace {v : m v = 0}, one vector per free column.
inline std::vector<Vec> kernel_vectors(const Matrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.mat(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse; throws SingularMatrixError when rank < size.
inline Matrix invert(const Matrix& m) {
    if (!m.is_square())
        throw DimensionMismatchError("invert: matrix is not square");
    const std::size_t n = m.rows();
    const RrefResult r = rref(Matrix::hstack(m, Matrix::identity(n)));
    if (r.pivots.size() < n || (n > 0 && r.pivots.back() >= n))
        throw SingularMatrixError("invert: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix& m) {
    return m.is_square() && rank(m) == m.rows();
}

/// Determinant by exact elimination.
inline Rational determinant(Matrix m) {
    if (!m.is_square())
        throw DimensionMismatchError("determinant: matrix is not square");
    Rational det(1);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            m.swap_rows(col, piv);
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

/// Integer power; negative exponents go through the inverse.
inline Matrix matrix_power(const Matrix& m, long k) {
    if (!m.is_square())
        throw DimensionMismatchError("matrix_power: matrix is not square");
    const Matrix base = k >= 0 ? m : invert(m);
    Matrix r = Matrix::identity(m.rows());
    for (long i = 0, steps = k >= 0 ? k : -k; i < steps; ++i) r = r * base;
    return r;
}

} // namespace bihom
