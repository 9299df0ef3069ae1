#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uqsl2/errors.hpp"

namespace uqsl2 {

/// Dense rectangular matrix over an exact scalar S, row-major, with exact
/// entrywise equality. Rows and columns are indexed from 0.
template <class S>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, S(0)) {}

    static ExactMatrix identity(size_t n) {
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    static ExactMatrix zero(size_t rows, size_t cols) { return ExactMatrix(rows, cols); }

    static ExactMatrix diagonal(const std::vector<S>& d) {
        ExactMatrix m(d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    static ExactMatrix from_columns(const std::vector<std::vector<S>>& cols) {
        if (cols.empty()) return ExactMatrix(0, 0);
        ExactMatrix m(cols[0].size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_)
                throw ShapeError("ragged column list");
            for (size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const S& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::vector<S> column(size_t j) const {
        std::vector<S> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    std::vector<S> row(size_t i) const {
        std::vector<S> v(cols_);
        for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }

    std::vector<S> diagonal_entries() const {
        size_t n = rows_ < cols_ ? rows_ : cols_;
        std::vector<S> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = at(i, i);
        return v;
    }

    bool is_zero() const {
        for (const S& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix operator-() const {
        ExactMatrix r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = S(0) - a_[k];
        return r;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        a.require_same_shape(b);
        ExactMatrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        a.require_same_shape(b);
        ExactMatrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("matrix product shape mismatch: " + a.shape_str() +
                             " * " + b.shape_str());
        ExactMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const S& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend ExactMatrix operator*(const S& c, const ExactMatrix& m) {
        ExactMatrix r(m.rows_, m.cols_);
        for (size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
        return r;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
        std::vector<S> r(rows_, S(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// ZBZ: entry (i,j) of the result is entry (d-i, d-j) of this matrix.
    ExactMatrix z_conjugate() const {
        if (!is_square()) throw ShapeError("Z-conjugation requires a square matrix");
        size_t d = rows_ == 0 ? 0 : rows_ - 1;
        ExactMatrix r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(d - i, d - j);
        return r;
    }

    ExactMatrix pow(size_t e) const {
        if (!is_square()) throw ShapeError("matrix power requires a square matrix");
        ExactMatrix r = identity(rows_);
        for (size_t k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    ExactMatrix inverse() const {
        if (!is_square()) throw ShapeError("matrix inverse requires a square matrix");
        size_t n = rows_;
        ExactMatrix a = *this, inv = identity(n);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a.at(piv, col).is_zero()) ++piv;
            if (piv == n) throw ArithmeticError("singular matrix");
            if (piv != col) {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            S p = a.at(col, col);
            for (size_t j = 0; j < n; ++j) {
                a.at(col, j) = a.at(col, j) / p;
                inv.at(col, j) = inv.at(col, j) / p;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col || a.at(i, col).is_zero()) continue;
                S f = a.at(i, col);
                for (size_t j = 0; j < n; ++j) {
                    a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                    inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    std::pair<ExactMatrix, std::vector<size_t>> rref() const {
        ExactMatrix a = *this;
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t piv = r;
            while (piv < rows_ && a.at(piv, c).is_zero()) ++piv;
            if (piv == rows_) continue;
            if (piv != r) a.swap_rows(piv, r);
            S p = a.at(r, c);
            for (size_t j = c; j < cols_; ++j) a.at(r, j) = a.at(r, j) / p;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || a.at(i, c).is_zero()) continue;
                S f = a.at(i, c);
                for (size_t j = c; j < cols_; ++j)
                    a.at(i, j) = a.at(i, j) - f * a.at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return {a, pivots};
    }

    size_t rank() const { return rref().second.size(); }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

private:
    size_t rows_, cols_;
    std::vector<S> a_;

    void require_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeError("shape mismatch: " + shape_str() + " vs " + o.shape_str());
    }
};

template <class T, class S, class F>
ExactMatrix<T> map_matrix(const ExactMatrix<S>& m, F&& f) {
    ExactMatrix<T> r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = f(m.at(i, j));
    return r;
}

template <class S>
std::vector<S> scale_vector(const S& c, const std::vector<S>& v) {
    std::vector<S> r(v.size(), S(0));
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

template <class S>
std::vector<S> add_vectors(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.size() != b.size()) throw ShapeError("vector sum shape mismatch");
    std::vector<S> r(a.size(), S(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.size() != b.size()) throw ShapeError("dot product shape mismatch");
    S r(0);
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

template <class S>
bool is_zero_vector(const std::vector<S>& v) {
    for (const S& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class S>
std::vector<S> unit_vector(size_t n, size_t i) {
    std::vector<S> v(n, S(0));
    v[i] = S(1);
    return v;
}

} // namespace uqsl2
