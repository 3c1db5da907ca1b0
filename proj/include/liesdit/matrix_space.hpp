#pragma once

#include "liesdit/errors.hpp"
#include "liesdit/linalg.hpp"
#include "liesdit/matrix.hpp"
#include "liesdit/rational.hpp"
#include "liesdit/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liesdit {

/// Linear span of square n x n matrices with a linearly independent basis.
///
/// Dependent inputs are not rejected: the constructor keeps the first maximal
/// independent subset (in input order) and records a warning per dropped matrix.
template <typename F>
class MatrixSpace {
public:
    MatrixSpace() = default;

    MatrixSpace(std::size_t n, const std::vector<Matrix<F>>& generators) : n_(n) {
        std::vector<Vec<F>> kept;
        IncrementalSpan<F> span(n * n);
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const Matrix<F>& g = generators[i];
            if (g.rows() != n || g.cols() != n) {
                throw Error(ErrorCode::shape_mismatch, "generator " + std::to_string(i) + " is " +
                                                           std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
            }
            if (!span.add(g.flat())) {
                warnings_.push_back("generator " + std::to_string(i) + " is linearly dependent on earlier ones; dropped");
                continue;
            }
            kept.push_back(g.flat());
            basis_.push_back(g);
        }
        coords_ = SpanCoordinates<F>(kept, n * n);
    }

    std::size_t n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix<F>>& basis() const { return basis_; }
    const Matrix<F>& operator[](std::size_t i) const { return basis_[i]; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// sum_i c_i B_i
    Matrix<F> element(const Vec<F>& coeffs) const {
        if (coeffs.size() != dim()) throw Error(ErrorCode::shape_mismatch, "coefficient vector length != dim");
        Matrix<F> m(n_, n_);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!coeffs[i].is_zero()) m += coeffs[i] * basis_[i];
        }
        return m;
    }

    /// Coordinates of m in the basis, or nullopt if m is outside the space.
    std::optional<Vec<F>> coordinates(const Matrix<F>& m) const {
        if (m.rows() != n_ || m.cols() != n_) throw Error(ErrorCode::shape_mismatch, "coordinates: shape mismatch");
        return coords_(m.flat());
    }

    bool contains(const Matrix<F>& m) const { return coordinates(m).has_value(); }

    /// The space as a subspace of F^(n^2) (row-major flattening).
    Subspace<F> as_subspace() const {
        std::vector<Vec<F>> rows;
        for (const auto& b : basis_) rows.push_back(b.flat());
        return Subspace<F>::span(n_ * n_, rows);
    }

private:
    std::size_t n_ = 0;
    std::vector<Matrix<F>> basis_;
    std::vector<std::string> warnings_;
    SpanCoordinates<F> coords_;
};

/// {v : B v = 0 for every B in the space}
template <typename F>
Subspace<F> common_kernel(const MatrixSpace<F>& s) {
    const std::size_t n = s.n();
    Matrix<F> stacked(n * s.dim(), n);
    for (std::size_t b = 0; b < s.dim(); ++b)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = s[b](r, c);
    return kernel(stacked);
}

/// B(U) = span{ B_i u : i, u in a basis of U }
template <typename F>
Subspace<F> image_space(const MatrixSpace<F>& s, const Subspace<F>& u) {
    if (u.ambient_dim() != s.n()) throw Error(ErrorCode::ambient_mismatch, "image_space: ambient mismatch");
    std::vector<Vec<F>> rows;
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(b * u.vector(i));
    return Subspace<F>::span(s.n(), rows);
}

/// True iff B(V) is contained in V for every B.
template <typename F>
bool is_invariant(const MatrixSpace<F>& s, const Subspace<F>& v) {
    return v.contains(image_space(s, v));
}

/// Entrywise image of a rational matrix space in GF(P).
template <typename Target>
MatrixSpace<Target> reduce_space(const MatrixSpace<Rational>& s) {
    std::vector<Matrix<Target>> mats;
    for (const auto& b : s.basis()) {
        Matrix<Target> m(s.n(), s.n());
        for (std::size_t r = 0; r < s.n(); ++r)
            for (std::size_t c = 0; c < s.n(); ++c) m(r, c) = Target::from_rational(b(r, c));
        mats.push_back(std::move(m));
    }
    return MatrixSpace<Target>(s.n(), mats);
}

}  // namespace liesdit
