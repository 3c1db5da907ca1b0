#pragma once

#include "liesdit/echelon.hpp"
#include "liesdit/errors.hpp"
#include "liesdit/matrix.hpp"
#include "liesdit/rational.hpp"
#include "liesdit/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liesdit {

/// Coefficients c with M = sum_i c_i targets[i], or nullopt when M is outside
/// the span. Dependent targets yield the solution with free coefficients zero.
template <typename F>
std::optional<Vec<F>> solve_in_span(const std::vector<Matrix<F>>& targets, const Matrix<F>& m) {
    for (const auto& t : targets) {
        if (t.rows() != m.rows() || t.cols() != m.cols()) {
            throw Error(ErrorCode::shape_mismatch, "solve_in_span: target shape differs from query");
        }
    }
    const std::size_t len = m.rows() * m.cols();
    const std::size_t k = targets.size();
    Matrix<F> aug(len, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < len; ++i) aug(i, j) = targets[j].flat()[i];
    for (std::size_t i = 0; i < len; ++i) aug(i, k) = m.flat()[i];
    const Echelon<F> e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    Vec<F> coeff(k);
    for (std::size_t i = 0; i < e.rank(); ++i) coeff[e.pivots[i]] = e.rref(i, k);
    return coeff;
}

/// Repeated coordinate extraction against a fixed linearly independent list of
/// vectors; one elimination up front, O(len * count) per query.
template <typename F>
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    SpanCoordinates(const std::vector<Vec<F>>& vectors, std::size_t len) : len_(len), count_(vectors.size()) {
        Matrix<F> aug(count_, len_ + count_);
        for (std::size_t i = 0; i < count_; ++i) {
            if (vectors[i].size() != len_) throw Error(ErrorCode::shape_mismatch, "SpanCoordinates: length mismatch");
            for (std::size_t j = 0; j < len_; ++j) aug(i, j) = vectors[i][j];
            aug(i, len_ + i) = F::one();
        }
        Echelon<F> e = echelon(aug);
        for (auto p : e.pivots) {
            if (p >= len_) throw Error(ErrorCode::invalid_argument, "SpanCoordinates: vectors are dependent");
        }
        reduced_ = std::move(e.rref);
        pivots_ = std::move(e.pivots);
    }

    std::optional<Vec<F>> operator()(const Vec<F>& v) const {
        if (v.size() != len_) throw Error(ErrorCode::shape_mismatch, "SpanCoordinates: query length mismatch");
        Vec<F> rest(len_ + count_);
        for (std::size_t j = 0; j < len_; ++j) rest[j] = v[j];
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const F c = rest[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = pivots_[i]; j < len_ + count_; ++j) {
                if (!reduced_(i, j).is_zero()) rest[j] -= c * reduced_(i, j);
            }
        }
        for (std::size_t j = 0; j < len_; ++j) {
            if (!rest[j].is_zero()) return std::nullopt;
        }
        Vec<F> coeff(count_);
        for (std::size_t i = 0; i < count_; ++i) coeff[i] = -rest[len_ + i];
        return coeff;
    }

    std::size_t count() const { return count_; }

private:
    std::size_t len_ = 0;
    std::size_t count_ = 0;
    Matrix<F> reduced_;
    std::vector<std::size_t> pivots_;
};

/// Growing span with O(rank * len) membership/insertion; rows kept in
/// semi-reduced echelon form (row i is zero at the pivots of rows j < i).
template <typename F>
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::size_t len) : len_(len) {}

    std::size_t dim() const { return rows_.size(); }

    /// Returns the residual of v after reduction (zero iff v is in the span).
    Vec<F> reduce(Vec<F> v) const {
        if (v.size() != len_) throw Error(ErrorCode::shape_mismatch, "IncrementalSpan: length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const F c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = pivots_[i]; j < len_; ++j) {
                if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
            }
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec(reduce(v)); }

    /// Adds v; returns false (and leaves the span unchanged) if v was already in it.
    bool add(const Vec<F>& v) {
        Vec<F> r = reduce(v);
        std::size_t p = 0;
        while (p < len_ && r[p].is_zero()) ++p;
        if (p == len_) return false;
        const F inv = r[p].inverse();
        for (std::size_t j = p; j < len_; ++j) r[j] *= inv;
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t len_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Polynomials: coefficient vectors, lowest degree first.

template <typename F>
using Poly = std::vector<F>;

template <typename F>
void poly_trim(Poly<F>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <typename F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    poly_trim(c);
    return c;
}

/// Quotient and remainder of a by a nonzero divisor.
template <typename F>
std::pair<Poly<F>, Poly<F>> poly_divmod(Poly<F> a, Poly<F> b) {
    poly_trim(a);
    poly_trim(b);
    if (b.empty()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly<F> q(a.size() - b.size() + 1);
    const F lead_inv = b.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
        const F c = a[k + b.size() - 1] * lead_inv;
        q[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    poly_trim(a);
    poly_trim(q);
    return {q, a};
}

template <typename F>
F poly_eval(const Poly<F>& p, const F& x) {
    F acc = F::zero();
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

/// p(M) by Horner's rule.
template <typename F>
Matrix<F> poly_eval(const Poly<F>& p, const Matrix<F>& m) {
    if (!m.is_square()) throw Error(ErrorCode::not_square, "polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> acc(n, n);
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += p[k];
    }
    return acc;
}

template <typename F>
std::string poly_to_string(const Poly<F>& p, const std::string& var = "x") {
    std::string s;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k].is_zero()) continue;
        std::string c = p[k].to_string();
        if (!s.empty()) s += (c[0] == '-') ? " - " : " + ";
        else if (c[0] == '-') s += "-";
        if (c[0] == '-') c.erase(0, 1);
        const bool unit = (c == "1");
        if (k == 0) s += c;
        else {
            if (!unit) s += c + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

/// Inverse of a square matrix, or nullopt if singular.
template <typename F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
    if (!a.is_square()) throw Error(ErrorCode::not_square, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = F::one();
    }
    const Echelon<F> e = echelon(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

/// Smallest subspace containing `seeds` and invariant under every matrix.
template <typename F>
Subspace<F> spin(const std::vector<Matrix<F>>& mats, std::size_t n, const std::vector<Vec<F>>& seeds) {
    IncrementalSpan<F> span(n);
    std::vector<Vec<F>> basis;
    for (const auto& v : seeds)
        if (span.add(v)) basis.push_back(v);
    for (std::size_t i = 0; i < basis.size() && span.dim() < n; ++i) {
        for (const auto& m : mats) {
            Vec<F> w = m * basis[i];
            if (span.add(w)) basis.push_back(std::move(w));
        }
    }
    return Subspace<F>::span(n, basis);
}

/// Monic characteristic polynomial det(x I - M), lowest coefficient first.
/// Similarity reduction to upper Hessenberg form followed by the standard
/// determinant recurrence; exact over any field.
template <typename F>
Poly<F> char_poly(const Matrix<F>& input) {
    if (!input.is_square()) throw Error(ErrorCode::not_square, "char_poly of non-square matrix");
    const std::size_t n = input.rows();
    Matrix<F> h = input;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t p = j + 1;
        while (p < n && h(p, j).is_zero()) ++p;
        if (p == n) continue;
        if (p != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
        }
        const F inv = h(j + 1, j).inverse();
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h(i, j).is_zero()) continue;
            const F u = h(i, j) * inv;
            for (std::size_t c = 0; c < n; ++c) h(i, c) -= u * h(j + 1, c);
            for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, i);
        }
    }
    // polys[k] = char poly of the leading k x k block.
    std::vector<Poly<F>> polys(n + 1);
    polys[0] = {F::one()};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t m = k - 1;  // 0-based index of the new row/col
        Poly<F> next = poly_mul(Poly<F>{-h(m, m), F::one()}, polys[k - 1]);
        next.resize(k + 1);
        F prod = F::one();
        for (std::size_t i = m; i-- > 0;) {
            prod *= h(i + 1, i);
            const F c = h(i, m) * prod;
            if (c.is_zero()) continue;
            for (std::size_t d = 0; d < polys[i].size(); ++d) next[d] -= c * polys[i][d];
        }
        polys[k] = std::move(next);
        polys[k].resize(k + 1);
    }
    return polys[n];
}

/// Rational roots with multiplicities plus the cofactor free of rational roots.
struct RationalRoots {
    std::vector<std::pair<Rational, std::size_t>> roots;  // ascending by value
    Poly<Rational> residual;                               // monic, no rational roots
};

/// Extracts all rational roots of a nonzero polynomial via the rational root
/// theorem. Throws Error(unsupported_spectrum) when the integer coefficients are
/// too large for divisor enumeration.
RationalRoots rational_roots(const Poly<Rational>& p);

/// Number of subspaces of GF(q)^n (sum of Gaussian binomials), saturating at `cap`+1.
std::size_t subspace_count(std::size_t n, std::size_t q, std::size_t cap = static_cast<std::size_t>(-1) / 4);

}  // namespace liesdit
