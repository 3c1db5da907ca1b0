#pragma once

#include "liesdit/echelon.hpp"
#include "liesdit/errors.hpp"
#include "liesdit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liesdit {

/// Subspace of F^n stored as the canonical RREF basis (rows, pivots strictly
/// increasing). Two subspaces are equal iff their representations are equal.
template <typename F>
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t n) { return Subspace(n, Matrix<F>(0, n), {}); }
    static Subspace full(std::size_t n) {
        std::vector<std::size_t> piv(n);
        for (std::size_t i = 0; i < n; ++i) piv[i] = i;
        return Subspace(n, Matrix<F>::identity(n), std::move(piv));
    }

    /// Row space of `m`.
    static Subspace row_space(const Matrix<F>& m) {
        Echelon<F> e = echelon(m);
        Matrix<F> basis(e.rank(), m.cols());
        for (std::size_t i = 0; i < e.rank(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = e.rref(i, j);
        return Subspace(m.cols(), std::move(basis), std::move(e.pivots));
    }

    static Subspace span(std::size_t n, const std::vector<Vec<F>>& vectors) {
        return row_space(Matrix<F>::from_rows(vectors, n));
    }

    /// Wraps a basis already known to be in canonical RREF (used by enumeration).
    static Subspace from_rref(Matrix<F> rref, std::vector<std::size_t> pivots) {
        const std::size_t n = rref.cols();
        return Subspace(n, std::move(rref), std::move(pivots));
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec<F> vector(std::size_t i) const { return basis_.row_vec(i); }
    std::vector<Vec<F>> vectors() const {
        std::vector<Vec<F>> out;
        out.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
        return out;
    }

    /// Coordinates of v in the RREF basis, or nullopt if v is not in the subspace.
    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        check_length(v.size());
        Vec<F> coeff(dim());
        Vec<F> rest = v;
        for (std::size_t i = 0; i < dim(); ++i) {
            coeff[i] = v[pivots_[i]];
            if (coeff[i].is_zero()) continue;
            for (std::size_t j = pivots_[i]; j < n_; ++j) {
                if (!basis_(i, j).is_zero()) rest[j] -= coeff[i] * basis_(i, j);
            }
        }
        if (!is_zero_vec(rest)) return std::nullopt;
        return coeff;
    }

    bool contains(const Vec<F>& v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const {
        check_ambient(other);
        for (std::size_t i = 0; i < other.dim(); ++i) {
            if (!contains(other.vector(i))) return false;
        }
        return true;
    }

    /// Orthogonal complement under the standard bilinear form; ann(ann(U)) = U.
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

    void check_ambient(const Subspace& other) const {
        if (other.n_ != n_) {
            throw Error(ErrorCode::ambient_mismatch,
                        "subspace ambient mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
        }
    }

private:
    Subspace(std::size_t n, Matrix<F> basis, std::vector<std::size_t> pivots)
        : n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    void check_length(std::size_t len) const {
        if (len != n_) throw Error(ErrorCode::shape_mismatch, "vector length does not match ambient dimension");
    }

    std::size_t n_ = 0;
    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

/// Right null space {v : M v = 0}.
template <typename F>
Subspace<F> kernel(const Matrix<F>& m) {
    const Echelon<F> e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<F> v(m.cols());
        v[f] = F::one();
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace<F>::span(m.cols(), basis);
}

template <typename F>
Subspace<F> Subspace<F>::annihilator() const {
    if (dim() == 0) return full(n_);
    return kernel(basis_);
}

template <typename F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
    u.check_ambient(v);
    std::vector<Vec<F>> rows = u.vectors();
    for (auto& r : v.vectors()) rows.push_back(std::move(r));
    return Subspace<F>::span(u.ambient_dim(), rows);
}

template <typename F>
Subspace<F> subspace_intersection(const Subspace<F>& u, const Subspace<F>& v) {
    u.check_ambient(v);
    return subspace_sum(u.annihilator(), v.annihilator()).annihilator();
}

/// Image of a subspace under a linear map given as a matrix acting on columns.
template <typename F>
Subspace<F> apply(const Matrix<F>& m, const Subspace<F>& u) {
    if (m.cols() != u.ambient_dim()) throw Error(ErrorCode::shape_mismatch, "apply: shape mismatch");
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(m * u.vector(i));
    return Subspace<F>::span(m.rows(), rows);
}

/// Matrix of A restricted to an A-invariant subspace V, in the basis of V:
/// column j holds the coordinates of A v_j. Throws if V is not invariant.
template <typename F>
Matrix<F> restrict_to(const Matrix<F>& a, const Subspace<F>& v) {
    if (!a.is_square() || a.rows() != v.ambient_dim()) {
        throw Error(ErrorCode::shape_mismatch, "restrict_to: shape mismatch");
    }
    Matrix<F> r(v.dim(), v.dim());
    for (std::size_t j = 0; j < v.dim(); ++j) {
        const auto c = v.coordinates(a * v.vector(j));
        if (!c) throw Error(ErrorCode::chain_not_invariant, "restrict_to: subspace is not invariant");
        for (std::size_t i = 0; i < v.dim(); ++i) r(i, j) = (*c)[i];
    }
    return r;
}

/// Subspace of V given by coordinates w.r.t. the basis of V, mapped to the ambient space.
template <typename F>
Subspace<F> lift(const Subspace<F>& v, const Subspace<F>& inner) {
    if (inner.ambient_dim() != v.dim()) throw Error(ErrorCode::ambient_mismatch, "lift: inner subspace mismatch");
    std::vector<Vec<F>> rows;
    for (std::size_t k = 0; k < inner.dim(); ++k) {
        const Vec<F> c = inner.vector(k);
        Vec<F> out(v.ambient_dim());
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (!c[i].is_zero()) out = axpy(c[i], v.vector(i), out);
        rows.push_back(std::move(out));
    }
    return Subspace<F>::span(v.ambient_dim(), rows);
}

}  // namespace liesdit
