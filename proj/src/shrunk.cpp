#include "liesdit/shrunk.hpp"

#include "liesdit/errors.hpp"

namespace liesdit {

namespace {

bool proper(const QSubspace& w, std::size_t k) { return w.dim() > 0 && w.dim() < k; }

// Seed vectors whose spans are tried: standard basis, rational eigenvectors of
// each matrix, and kernels of single matrices and of pairs.
std::vector<QVec> spin_seeds(const std::vector<QMatrix>& mats, std::size_t k) {
    std::vector<QVec> seeds;
    for (std::size_t i = 0; i < k; ++i) seeds.push_back(unit_vec<Rational>(k, i));
    for (const auto& m : mats) {
        RationalRoots rr;
        try {
            rr = rational_roots(char_poly(m));
        } catch (const Error&) {
            continue;  // coefficients too large for root search; skip this matrix
        }
        for (const auto& [lambda, mult] : rr.roots) {
            QMatrix shifted = m;
            for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= lambda;
            for (auto& v : kernel(shifted).vectors()) seeds.push_back(std::move(v));
        }
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const QSubspace ki = kernel(mats[i]);
        for (auto& v : ki.vectors()) seeds.push_back(std::move(v));
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            for (auto& v : subspace_intersection(ki, kernel(mats[j])).vectors()) seeds.push_back(std::move(v));
    }
    return seeds;
}

std::optional<QSubspace> invariant_by_spinning(const std::vector<QMatrix>& mats, std::size_t k) {
    const QSpace space(k, mats);
    const QSubspace ck = common_kernel(space);
    if (proper(ck, k)) return ck;
    const QSubspace im = image_space(space, QSubspace::full(k));
    if (proper(im, k)) return im;
    for (const auto& seed : spin_seeds(mats, k)) {
        QSubspace w = spin(mats, k, {seed});
        if (proper(w, k)) return w;
    }
    return std::nullopt;
}

// Proper nonzero invariant subspace of the block action, if the heuristics find one.
std::optional<QSubspace> find_invariant(const QSpace& block, std::size_t k) {
    if (k <= 1) return std::nullopt;
    const std::vector<QMatrix>& mats = block.basis();
    if (mats.empty()) return QSubspace::span(k, {unit_vec<Rational>(k, 0)});
    if (auto w = invariant_by_spinning(mats, k)) return w;
    // W invariant under all transposes gives an invariant annihilator.
    std::vector<QMatrix> dual;
    for (const auto& m : mats) dual.push_back(m.transpose());
    if (auto w = invariant_by_spinning(dual, k)) return w->annihilator();
    return std::nullopt;
}

}  // namespace

bool CompositionSeries::complete() const {
    for (const auto& f : factors)
        if (!f.absolutely_irreducible.value_or(false)) return false;
    return true;
}

CompositionSeries composition_series(const QSpace& s) {
    if (const auto failure = closure_check(s)) {
        throw Error(ErrorCode::not_closed, "composition series needs a Lie algebra: [B" + std::to_string(failure->i + 1) +
                                               ", B" + std::to_string(failure->j + 1) + "] leaves the span");
    }
    const std::size_t n = s.n();
    std::vector<QSubspace> chain{QSubspace::zero(n), QSubspace::full(n)};
    if (n == 0) return CompositionSeries{{QSubspace::zero(0)}, {}};

    BlockForm<Rational> form;
    bool refined = true;
    while (refined) {
        refined = false;
        form = block_form(s, chain);
        std::size_t offset = 0;
        for (std::size_t i = 0; i < form.blocks.size(); ++i) {
            const std::size_t size = form.block_sizes[i];
            if (const auto w = find_invariant(form.blocks[i], size)) {
                std::vector<QVec> rows = chain[i].vectors();
                for (std::size_t b = 0; b < w->dim(); ++b) {
                    const QVec c = w->vector(b);
                    QVec v(n);
                    for (std::size_t j = 0; j < size; ++j)
                        if (!c[j].is_zero()) v = axpy(c[j], form.change_of_basis.col_vec(offset + j), v);
                    rows.push_back(std::move(v));
                }
                chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(i) + 1, QSubspace::span(n, rows));
                refined = true;
                break;
            }
            offset += size;
        }
    }

    CompositionSeries out;
    out.chain = form.chain;
    for (std::size_t i = 0; i < form.blocks.size(); ++i) {
        CompositionFactor f;
        f.block = form.blocks[i];
        f.dim = form.block_sizes[i];
        f.trivial = f.dim == 1 && f.block.dim() == 0;
        f.envelope_dim = associative_envelope(f.block, true).dim();
        if (f.envelope_dim == f.dim * f.dim) f.absolutely_irreducible = true;
        out.factors.push_back(std::move(f));
    }
    return out;
}

const char* shrunk_answer_name(ShrunkAnswer a) {
    switch (a) {
        case ShrunkAnswer::yes: return "yes";
        case ShrunkAnswer::no: return "no";
        case ShrunkAnswer::undetermined: return "undetermined";
    }
    return "?";
}

ShrunkVerdict has_shrunk_subspace(const QSpace& s) {
    ShrunkVerdict v;
    v.series = composition_series(s);
    for (std::size_t i = 0; i < v.series.factors.size(); ++i) {
        if (!v.series.factors[i].trivial) continue;
        // B(V_{i+1}) lies in V_i, so V_{i+1} loses at least one dimension.
        auto report = shrink_deficit(s, v.series.chain[i + 1]);
        if (report.deficit <= 0) throw std::logic_error("trivial composition factor without a shrunk witness");
        v.answer = ShrunkAnswer::yes;
        v.trivial_factor = i;
        v.witness = std::move(report);
        return v;
    }
    v.answer = v.series.complete() ? ShrunkAnswer::no : ShrunkAnswer::undetermined;
    return v;
}

}  // namespace liesdit
