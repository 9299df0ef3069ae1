#pragma once

#include <vector>

#include "uqsl2/errors.hpp"
#include "uqsl2/matrix.hpp"

namespace uqsl2 {

/// Subspace of a coordinate space, held in canonical reduced column-echelon
/// form: basis columns are independent, the pivot (topmost nonzero) rows
/// strictly increase left to right, pivot entries are 1, and each pivot row is
/// zero in every other column. Two subspaces are equal iff their canonical
/// basis matrices are identical.
template <class S>
class Subspace {
public:
    Subspace() : ambient_(0), basis_(0, 0) {}

    static Subspace zero(size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = ExactMatrix<S>(ambient, 0);
        return s;
    }

    static Subspace full(size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = ExactMatrix<S>::identity(ambient);
        return s;
    }

    /// Canonicalized span of the columns of M.
    static Subspace column_space(const ExactMatrix<S>& m) {
        Subspace s;
        s.ambient_ = m.rows();
        auto [r, pivots] = m.transpose().rref();
        ExactMatrix<S> basis(m.rows(), pivots.size());
        for (size_t k = 0; k < pivots.size(); ++k)
            for (size_t i = 0; i < m.rows(); ++i) basis.at(i, k) = r.at(k, i);
        s.basis_ = std::move(basis);
        return s;
    }

    static Subspace span_of(const std::vector<S>& v) {
        return column_space(ExactMatrix<S>::from_columns({v}));
    }

    /// Canonical kernel of M (null space of columns).
    static Subspace kernel(const ExactMatrix<S>& m) {
        auto [r, pivots] = m.rref();
        size_t n = m.cols();
        std::vector<bool> is_pivot(n, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::vector<S>> cols;
        for (size_t free = 0; free < n; ++free) {
            if (is_pivot[free]) continue;
            std::vector<S> v(n, S(0));
            v[free] = S(1);
            for (size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = S(0) - r.at(k, free);
            cols.push_back(std::move(v));
        }
        if (cols.empty()) return zero(n);
        return column_space(ExactMatrix<S>::from_columns(cols));
    }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.cols(); }
    bool is_zero() const { return dim() == 0; }
    const ExactMatrix<S>& basis() const { return basis_; }

    std::vector<S> basis_vector(size_t j) const { return basis_.column(j); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    bool contains_vector(const std::vector<S>& v) const {
        if (v.size() != ambient_) throw ShapeError("ambient dimension mismatch");
        if (is_zero_vector(v)) return true;
        std::vector<std::vector<S>> cols;
        for (size_t j = 0; j < basis_.cols(); ++j) cols.push_back(basis_.column(j));
        cols.push_back(v);
        return ExactMatrix<S>::from_columns(cols).rank() == dim();
    }

    bool contains(const Subspace& other) const {
        require_same_ambient(other);
        for (size_t j = 0; j < other.dim(); ++j)
            if (!contains_vector(other.basis_vector(j))) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        require_same_ambient(other);
        std::vector<std::vector<S>> cols;
        for (size_t j = 0; j < dim(); ++j) cols.push_back(basis_vector(j));
        for (size_t j = 0; j < other.dim(); ++j) cols.push_back(other.basis_vector(j));
        if (cols.empty()) return zero(ambient_);
        return column_space(ExactMatrix<S>::from_columns(cols));
    }

    Subspace intersect(const Subspace& other) const {
        require_same_ambient(other);
        if (is_zero() || other.is_zero()) return zero(ambient_);
        // Solve A u = B v via the kernel of [A | -B]; intersection = A * {u}.
        ExactMatrix<S> stacked(ambient_, dim() + other.dim());
        for (size_t i = 0; i < ambient_; ++i) {
            for (size_t j = 0; j < dim(); ++j) stacked.at(i, j) = basis_.at(i, j);
            for (size_t j = 0; j < other.dim(); ++j)
                stacked.at(i, dim() + j) = S(0) - other.basis_.at(i, j);
        }
        Subspace k = kernel(stacked);
        if (k.is_zero()) return zero(ambient_);
        std::vector<std::vector<S>> cols;
        for (size_t j = 0; j < k.dim(); ++j) {
            std::vector<S> u(dim());
            auto kv = k.basis_vector(j);
            for (size_t t = 0; t < dim(); ++t) u[t] = kv[t];
            cols.push_back(basis_.apply(u));
        }
        return column_space(ExactMatrix<S>::from_columns(cols));
    }

    /// Image of this subspace under the linear map M.
    Subspace image_under(const ExactMatrix<S>& m) const {
        if (m.cols() != ambient_) throw ShapeError("ambient dimension mismatch");
        if (is_zero()) return zero(m.rows());
        return column_space(m * basis_);
    }

    /// Orthogonal complement with respect to the standard dot pairing
    /// (the Gram matrix of the reference bases is the identity).
    Subspace perp() const {
        if (is_zero()) return full(ambient_);
        return kernel(basis_.transpose());
    }

private:
    size_t ambient_;
    ExactMatrix<S> basis_;

    void require_same_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            throw ShapeError("ambient dimension mismatch: " + std::to_string(ambient_) +
                             " vs " + std::to_string(o.ambient_));
    }
};

} // namespace uqsl2
