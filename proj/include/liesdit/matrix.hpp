#pragma once

#include "liesdit/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace liesdit {

template <typename F>
using Vec = std::vector<F>;

/// Dense row-major matrix over an exact field F.
template <typename F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<F>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error(ErrorCode::shape_mismatch, "ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }
    /// Elementary matrix E_ij (0-based indices).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(n, n);
        m(i, j) = F::one();
        return m;
    }
    static Matrix diagonal(const Vec<F>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    /// Builds a matrix whose rows are the given vectors (all of length `cols`).
    static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(ErrorCode::shape_mismatch, "row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix column(const Vec<F>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<F> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const F> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec<F> row_vec(std::size_t r) const { return Vec<F>(row(r).begin(), row(r).end()); }
    Vec<F> col_vec(std::size_t c) const {
        Vec<F> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    /// Entries in row-major order; identifies M(r x c) with F^(rc).
    const Vec<F>& flat() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    F trace() const {
        F t = F::zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const F& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
    friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
    Matrix operator-() const {
        Matrix m(*this);
        for (auto& x : m.data_) x = -x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::shape_mismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
        if (a.cols_ != v.size()) throw Error(ErrorCode::shape_mismatch, "matrix-vector shape mismatch");
        Vec<F> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ", [" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw Error(ErrorCode::shape_mismatch, "matrix shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec<F> data_;
};

/// Commutator [A, B] = AB - BA.
template <typename F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
    return a * b - b * a;
}

template <typename F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

template <typename F>
Vec<F> axpy(const F& a, const Vec<F>& x, Vec<F> y) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
    return y;
}

template <typename F>
F dot(const Vec<F>& a, const Vec<F>& b) {
    F s = F::zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

template <typename F>
Vec<F> unit_vec(std::size_t n, std::size_t i) {
    Vec<F> v(n);
    v[i] = F::one();
    return v;
}

/// Reinterprets a length-(rows*cols) vector as a row-major matrix.
template <typename F>
Matrix<F> unflatten(const Vec<F>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw Error(ErrorCode::shape_mismatch, "unflatten size mismatch");
    Matrix<F> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
    return m;
}

template <typename F>
std::string to_string(const Vec<F>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

}  // namespace liesdit
