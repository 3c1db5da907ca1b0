#pragma once

#include "liesdit/matrix.hpp"
#include "liesdit/rational.hpp"

#include <cstddef>
#include <vector>

namespace liesdit {

/// Reduced row echelon form together with its pivot profile.
template <typename F>
struct Echelon {
    Matrix<F> rref;                   // same shape as the input; zero rows at the bottom
    std::vector<std::size_t> pivots;  // pivot column of row i, strictly increasing
    std::size_t rank() const { return pivots.size(); }
};

/// Plain Gauss-Jordan elimination over any field. Pivot choice: leftmost column
/// with a nonzero entry among the remaining rows, first such row.
template <typename F>
Echelon<F> echelon_gauss_jordan(Matrix<F> m) {
    Echelon<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const F inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rref = std::move(m);
    return out;
}

/// Canonical RREF. Over the rationals this dispatches to the fraction-free
/// overload below; other fields use Gauss-Jordan.
template <typename F>
Echelon<F> echelon(const Matrix<F>& m) {
    return echelon_gauss_jordan(m);
}

/// Rational RREF via integer Bareiss elimination on denominator-cleared rows,
/// followed by exact back substitution.
Echelon<Rational> echelon(const Matrix<Rational>& m);

template <typename F>
std::size_t rank(const Matrix<F>& m) {
    return echelon(m).rank();
}

/// Determinant via fraction-free elimination (rationals) or Gauss elimination.
template <typename F>
F determinant(Matrix<F> m) {
    if (!m.is_square()) throw Error(ErrorCode::not_square, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    F det = F::one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return F::zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        const F inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Rational determinant(Matrix<Rational> m);

}  // namespace liesdit
