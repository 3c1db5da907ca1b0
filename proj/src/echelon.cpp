#include "liesdit/echelon.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace liesdit {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales every row by the lcm of its denominators. Row scaling preserves the row space.
IntRows clear_denominators(const Matrix<Rational>& m) {
    IntRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    return rows;
}

// Fraction-free forward elimination. Every division is exact (entries are
// minors of the row-permuted input); a non-exact division indicates a bug.
std::vector<std::size_t> bareiss_forward(IntRows& a, std::size_t cols, int* swap_sign = nullptr) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            if (swap_sign != nullptr) *swap_sign = -*swap_sign;
        }
        const mpz_class& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = piv * a[i][j] - lead * a[r][j];
                if (prev != 1) {
                    if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
                        throw std::logic_error("Bareiss: inexact division");
                    }
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                a[i][j] = t;
            }
            a[i][c] = 0;
        }
        // Rows that skipped earlier pivot columns stay consistent because the
        // skipped columns are already zero below row r.
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Echelon<Rational> echelon(const Matrix<Rational>& m) {
    IntRows a = clear_denominators(m);
    const std::vector<std::size_t> pivots = bareiss_forward(a, m.cols());

    Echelon<Rational> out;
    out.pivots = pivots;
    out.rref = Matrix<Rational>(m.rows(), m.cols());
    const std::size_t rank = pivots.size();

    // Normalize pivot rows, then clear above each pivot from the bottom up.
    for (std::size_t i = 0; i < rank; ++i) {
        const mpz_class& piv = a[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < m.cols(); ++j) {
            if (a[i][j] != 0) out.rref(i, j) = Rational(a[i][j], piv);
        }
    }
    for (std::size_t k = rank; k-- > 0;) {
        const std::size_t c = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (out.rref(i, c).is_zero()) continue;
            const Rational f = out.rref(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!out.rref(k, j).is_zero()) out.rref(i, j) -= f * out.rref(k, j);
            }
        }
    }
    return out;
}

Rational determinant(Matrix<Rational> m) {
    if (!m.is_square()) throw Error(ErrorCode::not_square, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational::one();
    // Clearing row denominators scales det by the product of the row multipliers.
    mpz_class scale = 1;
    IntRows a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
        scale *= l;
    }
    int sign = 1;
    const auto pivots = bareiss_forward(a, n, &sign);
    if (pivots.size() < n) return Rational::zero();
    // With full rank the last Bareiss pivot is the determinant of the permuted matrix.
    return Rational(a[n - 1][n - 1] * sign, scale);
}

}  // namespace liesdit
