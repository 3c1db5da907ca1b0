#include "liesdit/cartan.hpp"

#include "liesdit/errors.hpp"
#include "liesdit/linalg.hpp"

#include <algorithm>
#include <optional>

namespace liesdit {

CartanConfig CartanConfig::with_omega_size(std::size_t size) {
    CartanConfig cfg;
    for (std::size_t i = 0; i < size; ++i) cfg.omega.emplace_back(static_cast<long>(i));
    return cfg;
}

QSubspace fitting_null(const LieStructure& lie, const QVec& x) {
    const std::size_t m = lie.dim();
    const QMatrix ad = ad_matrix(lie, x);
    QMatrix power = ad;
    QSubspace k = kernel(power);
    for (std::size_t e = 2; e <= m && k.dim() < m; ++e) {
        power = power * ad;
        QSubspace next = kernel(power);
        if (next.dim() == k.dim()) break;
        k = std::move(next);
    }
    return k;
}

QMatrix restricted_ad(const LieStructure& lie, const QVec& y, const QSubspace& k) {
    return restrict_to(ad_matrix(lie, y), k);
}

bool is_nilpotent_matrix(const QMatrix& a) {
    const Poly<Rational> p = char_poly(a);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!p[i].is_zero()) return false;
    return true;
}

bool verify_cartan(const LieStructure& lie, const QSubspace& h) {
    if (!is_subalgebra(lie, h)) throw Error(ErrorCode::not_subalgebra, "verify_cartan: argument is not a subalgebra");
    return is_nilpotent(lie, h) && normalizer(lie, h) == h;
}

QSpace cartan_as_matrix_space(const LieStructure& lie, const QSubspace& h) {
    if (h.ambient_dim() != lie.dim()) throw Error(ErrorCode::ambient_mismatch, "cartan_as_matrix_space: mismatch");
    std::vector<QMatrix> mats;
    for (std::size_t i = 0; i < h.dim(); ++i) mats.push_back(lie.to_matrix(h.vector(i)));
    return QSpace(lie.source().n(), mats);
}

namespace {

bool acts_non_nilpotently(const LieStructure& lie, const QVec& y, const QSubspace& k) {
    return !is_nilpotent_matrix(restricted_ad(lie, y, k));
}

// Element y of k whose ad is not nilpotent on k. Tries the canonical basis,
// then pairwise sums, then points on the curve sum_i c^i b_i; the last family
// must succeed for some c <= r(r-1) when k is not nilpotent (Engel), since the
// obstruction is a nonzero polynomial of degree <= r(r-1) in c.
std::optional<QVec> non_nilpotent_element(const LieStructure& lie, const QSubspace& k) {
    const std::size_t r = k.dim();
    for (std::size_t i = 0; i < r; ++i) {
        const QVec b = k.vector(i);
        if (acts_non_nilpotently(lie, b, k)) return b;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const QVec y = axpy(Rational::one(), k.vector(i), k.vector(j));
            if (acts_non_nilpotently(lie, y, k)) return y;
        }
    for (std::size_t c = 1; c <= r * (r - 1) + 1; ++c) {
        QVec y(lie.dim());
        Rational coeff = Rational::one();
        for (std::size_t i = 0; i < r; ++i) {
            y = axpy(coeff, k.vector(i), y);
            coeff *= Rational(static_cast<long>(c));
        }
        if (acts_non_nilpotently(lie, y, k)) return y;
    }
    return std::nullopt;
}

std::vector<Rational> initial_omega(const CartanConfig& cfg, std::size_t m) {
    std::vector<Rational> omega = cfg.omega;
    if (omega.empty()) omega = CartanConfig::with_omega_size(m + 1).omega;
    std::vector<Rational> sorted = omega;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::invalid_argument, "omega values must be distinct");
    }
    if (omega.size() < m + 1) {
        throw Error(ErrorCode::invalid_argument, "omega needs at least dim + 1 = " + std::to_string(m + 1) + " values");
    }
    return omega;
}

// Appends the smallest integers above the current maximum until the size is multiplied.
void enlarge(std::vector<Rational>& omega, std::size_t factor) {
    const std::size_t target = omega.size() * std::max<std::size_t>(factor, 2);
    const Rational top = *std::max_element(omega.begin(), omega.end());
    mpz_class floor_top;
    mpz_fdiv_q(floor_top.get_mpz_t(), top.num().get_mpz_t(), top.den().get_mpz_t());
    Rational next(floor_top + 1, mpz_class(1));
    while (omega.size() < target) {
        omega.push_back(next);
        next += Rational::one();
    }
}

}  // namespace

CartanResult cartan_subalgebra(const LieStructure& lie, const CartanConfig& cfg) {
    const std::size_t m = lie.dim();
    CartanResult result;
    if (m == 0) {
        result.subalgebra = QSubspace::zero(0);
        result.verified = true;
        return result;
    }
    std::vector<Rational> omega = initial_omega(cfg, m);

    if (is_nilpotent(lie)) {
        result.subalgebra = QSubspace::full(m);
        result.regular_element = unit_vec<Rational>(m, 0);
        result.descent_trace.push_back({result.regular_element, m});
        result.verified = verify_cartan(lie, result.subalgebra);
        return result;
    }

    QVec x = unit_vec<Rational>(m, 0);
    QSubspace k = fitting_null(lie, x);
    for (std::size_t i = 1; i < m; ++i) {
        QVec e = unit_vec<Rational>(m, i);
        QSubspace f = fitting_null(lie, e);
        if (f.dim() < k.dim()) {
            x = std::move(e);
            k = std::move(f);
        }
    }

    while (true) {
        result.descent_trace.push_back({x, k.dim()});
        if (verify_cartan(lie, k)) {
            result.subalgebra = std::move(k);
            result.regular_element = std::move(x);
            result.verified = true;
            return result;
        }
        const auto y = non_nilpotent_element(lie, k);
        if (!y) throw Error(ErrorCode::descent_stalled, "no element acts non-nilpotently on a non-nilpotent F_0");
        const QVec diff = axpy(-Rational::one(), x, *y);

        bool moved = false;
        for (std::size_t round = 0; round < cfg.max_rounds && !moved; ++round) {
            if (round > 0) enlarge(omega, cfg.enlarge_factor);
            std::optional<Rational> best_c;
            QSubspace best;
            for (const Rational& c : omega) {
                QSubspace f = fitting_null(lie, axpy(c, diff, x));
                if (!best_c || f.dim() < best.dim() || (f.dim() == best.dim() && c < *best_c)) {
                    best_c = c;
                    best = std::move(f);
                }
            }
            if (best_c && best.dim() < k.dim()) {
                x = axpy(*best_c, diff, x);
                k = std::move(best);
                moved = true;
            }
        }
        if (!moved) {
            throw Error(ErrorCode::descent_stalled, "Fitting descent stalled at dimension " + std::to_string(k.dim()) +
                                                        " after " + std::to_string(cfg.max_rounds) + " rounds");
        }
    }
}

}  // namespace liesdit
