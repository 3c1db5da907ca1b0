#include "liesdit/lie.hpp"

#include "liesdit/errors.hpp"
#include "liesdit/linalg.hpp"

#include <deque>

namespace liesdit {

std::optional<ClosureFailure> closure_check(const QSpace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = i + 1; j < s.dim(); ++j) {
            if (!s.contains(commutator(s[i], s[j]))) return ClosureFailure{i, j};
        }
    }
    return std::nullopt;
}

LieStructure::LieStructure(QSpace source) : source_(std::move(source)), m_(source_.dim()) {
    constants_.assign(m_ * m_ * m_, Rational::zero());
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = i + 1; j < m_; ++j) {
            const auto coords = source_.coordinates(commutator(source_[i], source_[j]));
            if (!coords) {
                throw Error(ErrorCode::not_closed, "not a Lie algebra: [B" + std::to_string(i + 1) + ", B" +
                                                       std::to_string(j + 1) + "] leaves the span");
            }
            for (std::size_t k = 0; k < m_; ++k) {
                constants_[(i * m_ + j) * m_ + k] = (*coords)[k];
                constants_[(j * m_ + i) * m_ + k] = -(*coords)[k];
            }
        }
    }
}

QVec LieStructure::bracket(const QVec& x, const QVec& y) const {
    if (x.size() != m_ || y.size() != m_) throw Error(ErrorCode::shape_mismatch, "bracket: length mismatch");
    QVec out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m_; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < m_; ++k) {
                const Rational& c = constant(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

QMatrix ad_matrix(const LieStructure& lie, const QVec& x) {
    const std::size_t m = lie.dim();
    if (x.size() != m) throw Error(ErrorCode::shape_mismatch, "ad_matrix: coefficient vector length != dim");
    QMatrix ad(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Rational& c = lie.constant(i, j, k);
                if (!c.is_zero()) ad(k, j) += x[i] * c;
            }
    }
    return ad;
}

QSpace adjoint_space(const LieStructure& lie) {
    std::vector<QMatrix> mats;
    for (std::size_t i = 0; i < lie.dim(); ++i) mats.push_back(ad_matrix(lie, unit_vec<Rational>(lie.dim(), i)));
    // The zero matrix is dependent on anything, so central elements drop out.
    return QSpace(lie.dim(), mats);
}

QMatrix killing_form(const LieStructure& lie) {
    const std::size_t m = lie.dim();
    std::vector<QMatrix> ads;
    for (std::size_t i = 0; i < m; ++i) ads.push_back(ad_matrix(lie, unit_vec<Rational>(m, i)));
    QMatrix k(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            k(i, j) = (ads[i] * ads[j]).trace();
            k(j, i) = k(i, j);
        }
    }
    return k;
}

bool is_semisimple(const LieStructure& lie) {
    return rank(killing_form(lie)) == lie.dim();
}

QSubspace bracket_span(const LieStructure& lie, const QSubspace& a, const QSubspace& b) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) rows.push_back(lie.bracket(a.vector(i), b.vector(j)));
    return QSubspace::span(lie.dim(), rows);
}

namespace {

SeriesReport run_series(const LieStructure& lie, std::optional<QSubspace> h, SeriesKind kind) {
    const QSubspace start = h ? *h : QSubspace::full(lie.dim());
    SeriesReport report{kind, {start}, false};
    // Dimensions strictly decrease until the series stabilizes: at most dim+1 terms.
    for (std::size_t step = 0; step <= lie.dim(); ++step) {
        const QSubspace& last = report.terms.back();
        QSubspace next = (kind == SeriesKind::lower_central) ? bracket_span(lie, last, start)
                                                              : bracket_span(lie, last, last);
        if (next == last) {
            report.stabilized = true;
            break;
        }
        report.terms.push_back(std::move(next));
    }
    return report;
}

}  // namespace

SeriesReport lower_central_series(const LieStructure& lie, std::optional<QSubspace> h) {
    return run_series(lie, std::move(h), SeriesKind::lower_central);
}

SeriesReport derived_series(const LieStructure& lie, std::optional<QSubspace> h) {
    return run_series(lie, std::move(h), SeriesKind::derived);
}

bool is_nilpotent(const LieStructure& lie, std::optional<QSubspace> h) {
    return lower_central_series(lie, std::move(h)).reaches_zero();
}

bool is_solvable(const LieStructure& lie, std::optional<QSubspace> h) {
    return derived_series(lie, std::move(h)).reaches_zero();
}

bool is_subalgebra(const LieStructure& lie, const QSubspace& h) {
    if (h.ambient_dim() != lie.dim()) throw Error(ErrorCode::ambient_mismatch, "subspace is not in the algebra");
    return h.contains(bracket_span(lie, h, h));
}

QSubspace normalizer(const LieStructure& lie, const QSubspace& h) {
    if (!is_subalgebra(lie, h)) throw Error(ErrorCode::not_subalgebra, "normalizer: argument is not a subalgebra");
    const std::size_t m = lie.dim();
    const QSubspace ann = h.annihilator();
    if (ann.dim() == 0) return QSubspace::full(m);
    // x is in the normalizer iff w . [x, h_j] = 0 for every annihilator row w and basis h_j.
    QMatrix system(ann.dim() * h.dim(), m);
    for (std::size_t j = 0; j < h.dim(); ++j) {
        const QMatrix ad_h = ad_matrix(lie, h.vector(j));  // [x, h_j] = -ad_{h_j} x
        for (std::size_t w = 0; w < ann.dim(); ++w) {
            const QVec wrow = ann.vector(w);
            for (std::size_t c = 0; c < m; ++c) {
                Rational s;
                for (std::size_t r = 0; r < m; ++r) {
                    if (!wrow[r].is_zero() && !ad_h(r, c).is_zero()) s += wrow[r] * ad_h(r, c);
                }
                system(j * ann.dim() + w, c) = s;
            }
        }
    }
    return kernel(system);
}

bool is_self_normalizing(const LieStructure& lie, const QSubspace& h) {
    return normalizer(lie, h) == h;
}

QSubspace generated_subalgebra(const LieStructure& lie, const std::vector<QVec>& generators) {
    QSubspace current = QSubspace::span(lie.dim(), generators);
    for (std::size_t round = 0; round <= lie.dim(); ++round) {
        QSubspace next = subspace_sum(current, bracket_span(lie, current, current));
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

QSpace associative_envelope(const QSpace& s, bool unital) {
    const std::size_t n = s.n();
    IncrementalSpan<Rational> span(n * n);
    std::vector<QMatrix> basis;
    std::deque<std::size_t> frontier;
    auto offer = [&](const QMatrix& m) {
        if (span.add(m.flat())) {
            basis.push_back(m);
            frontier.push_back(basis.size() - 1);
        }
    };
    if (unital) offer(QMatrix::identity(n));
    for (const auto& b : s.basis()) offer(b);
    // Every word in the generators is (shorter word) * generator, so right
    // multiplication by the original generators reaches the whole algebra.
    while (!frontier.empty() && span.dim() < n * n) {
        const std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : s.basis()) {
            offer(basis[idx] * g);
            if (span.dim() == n * n) break;
        }
    }
    return QSpace(n, basis);
}

}  // namespace liesdit
