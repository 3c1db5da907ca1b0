#pragma once

#include "liesdit/enumerate.hpp"
#include "liesdit/lie.hpp"
#include "liesdit/linalg.hpp"
#include "liesdit/matrix_space.hpp"
#include "liesdit/zp.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liesdit {

template <typename F>
struct DeficitReport {
    Subspace<F> subspace;
    Subspace<F> image;
    long deficit = 0;  // dim U - dim B(U); U is shrunk iff positive
};

template <typename F>
DeficitReport<F> shrink_deficit(const MatrixSpace<F>& s, const Subspace<F>& u) {
    DeficitReport<F> r{u, image_space(s, u), 0};
    r.deficit = static_cast<long>(u.dim()) - static_cast<long>(r.image.dim());
    return r;
}

/// sd(U1 meet U2) + sd(U1 + U2) >= sd(U1) + sd(U2)
template <typename F>
bool supermodularity_check(const MatrixSpace<F>& s, const Subspace<F>& u1, const Subspace<F>& u2) {
    const auto sd = [&](const Subspace<F>& u) { return shrink_deficit(s, u).deficit; };
    return sd(subspace_intersection(u1, u2)) + sd(subspace_sum(u1, u2)) >= sd(u1) + sd(u2);
}

template <typename F>
struct NcrkReport {
    std::string field;
    std::size_t n = 0;
    std::size_t ncrk = 0;
    std::size_t max_deficit = 0;
    Subspace<F> canonical_lower;  // intersection of all max-deficit subspaces
    Subspace<F> canonical_upper;  // sum of all max-deficit subspaces
    std::size_t all_max_deficit_count = 0;
    std::size_t subspaces_examined = 0;
    bool lower_attains_max = false;
    bool upper_attains_max = false;
};

/// Exhaustive max-deficit search over GF(P)^n. Throws Error(guard_exceeded).
template <std::uint32_t P>
NcrkReport<Zp<P>> ncrk_bruteforce(const MatrixSpace<Zp<P>>& s, std::size_t guard = kDefaultSubspaceGuard) {
    using F = Zp<P>;
    const std::size_t n = s.n();
    NcrkReport<F> r;
    r.field = "GF(" + std::to_string(P) + ")";
    r.n = n;
    long best = -1;
    std::optional<Subspace<F>> lower, upper;
    SubspaceEnumerator<P> it(n, guard);
    while (auto u = it.next()) {
        ++r.subspaces_examined;
        const long d = shrink_deficit(s, *u).deficit;
        if (d > best) {
            best = d;
            lower = *u;
            upper = *u;
            r.all_max_deficit_count = 1;
        } else if (d == best) {
            lower = subspace_intersection(*lower, *u);
            upper = subspace_sum(*upper, *u);
            ++r.all_max_deficit_count;
        }
    }
    r.max_deficit = static_cast<std::size_t>(best);
    r.ncrk = n - r.max_deficit;
    r.canonical_lower = *lower;
    r.canonical_upper = *upper;
    r.lower_attains_max = shrink_deficit(s, r.canonical_lower).deficit == best;
    r.upper_attains_max = shrink_deficit(s, r.canonical_upper).deficit == best;
    return r;
}

template <std::uint32_t P>
bool has_shrunk_bruteforce(const MatrixSpace<Zp<P>>& s, std::size_t guard = kDefaultSubspaceGuard) {
    return ncrk_bruteforce<P>(s, guard).max_deficit > 0;
}

/// Conjugation T^-1 B T into block upper-triangular form along an invariant flag.
template <typename F>
struct BlockForm {
    std::vector<Subspace<F>> chain;  // 0 = V_0 < ... < V_d = F^n
    Matrix<F> change_of_basis;       // columns extend the chain
    std::vector<Matrix<F>> conjugated;
    std::vector<std::size_t> block_sizes;
    std::vector<MatrixSpace<F>> blocks;  // induced actions on V_i / V_{i-1}
};

/// The flag may omit 0 and F^n. Throws Error(chain_not_invariant) if a term is
/// not invariant or the terms are not strictly increasing.
template <typename F>
BlockForm<F> block_form(const MatrixSpace<F>& s, std::vector<Subspace<F>> chain) {
    const std::size_t n = s.n();
    if (chain.empty() || chain.front().dim() != 0) chain.insert(chain.begin(), Subspace<F>::zero(n));
    if (chain.back().dim() != n) chain.push_back(Subspace<F>::full(n));
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].ambient_dim() != n) throw Error(ErrorCode::ambient_mismatch, "chain term has wrong ambient dimension");
        if (i > 0 && (!chain[i].contains(chain[i - 1]) || chain[i].dim() == chain[i - 1].dim())) {
            throw Error(ErrorCode::chain_not_invariant, "chain term " + std::to_string(i) + " does not strictly contain its predecessor");
        }
        if (!is_invariant(s, chain[i])) {
            throw Error(ErrorCode::chain_not_invariant, "chain term " + std::to_string(i) + " is not invariant");
        }
    }
    BlockForm<F> out;
    IncrementalSpan<F> span(n);
    std::vector<Vec<F>> cols;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        for (std::size_t k = 0; k < chain[i].dim(); ++k) {
            Vec<F> v = chain[i].vector(k);
            if (span.add(v)) cols.push_back(std::move(v));
        }
        out.block_sizes.push_back(chain[i].dim() - chain[i - 1].dim());
    }
    Matrix<F> t(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) t(r, c) = cols[c][r];
    const Matrix<F> tinv = *inverse(t);
    std::size_t offset = 0;
    for (const auto& b : s.basis()) out.conjugated.push_back(tinv * b * t);
    for (std::size_t size : out.block_sizes) {
        std::vector<Matrix<F>> mats;
        for (const auto& c : out.conjugated) {
            Matrix<F> blk(size, size);
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t q = 0; q < size; ++q) blk(r, q) = c(offset + r, offset + q);
            mats.push_back(std::move(blk));
        }
        // Zero blocks are dropped by the span, so a zero action gives a 0-dim space.
        std::vector<Matrix<F>> nonzero;
        for (auto& m : mats)
            if (!m.is_zero()) nonzero.push_back(std::move(m));
        out.blocks.emplace_back(size, nonzero);
        offset += size;
    }
    out.chain = std::move(chain);
    out.change_of_basis = std::move(t);
    return out;
}

template <typename F>
std::vector<MatrixSpace<F>> diagonal_blocks(const MatrixSpace<F>& s, const std::vector<Subspace<F>>& chain) {
    return block_form(s, chain).blocks;
}

/// Some diagonal block has a shrunk subspace (exhaustive per block).
template <std::uint32_t P>
bool blockd_shrunk_check(const std::vector<MatrixSpace<Zp<P>>>& blocks, std::size_t guard = kDefaultSubspaceGuard) {
    for (const auto& b : blocks)
        if (has_shrunk_bruteforce<P>(b, guard)) return true;
    return false;
}

struct CompositionFactor {
    QSpace block;
    std::size_t dim = 0;
    bool trivial = false;
    std::optional<bool> absolutely_irreducible;  // nullopt: undetermined
    std::size_t envelope_dim = 0;
};

struct CompositionSeries {
    std::vector<QSubspace> chain;
    std::vector<CompositionFactor> factors;
    bool complete() const;
};

/// Invariant flag refined by common kernels, images and spinning of
/// candidate vectors (standard basis, rational eigenvectors, common kernels of
/// at most two basis matrices, and the same for the dual action). Factors that
/// do not split are certified absolutely irreducible when their unital
/// associative envelope is the full matrix algebra, else left undetermined.
/// Throws Error(not_closed).
CompositionSeries composition_series(const QSpace& s);

enum class ShrunkAnswer { yes, no, undetermined };

const char* shrunk_answer_name(ShrunkAnswer a);

struct ShrunkVerdict {
    ShrunkAnswer answer = ShrunkAnswer::undetermined;
    std::optional<std::size_t> trivial_factor;  // 0-based index into series.factors
    std::optional<DeficitReport<Rational>> witness;
    CompositionSeries series;
};

/// yes iff a composition factor is the 1-dimensional zero action.
ShrunkVerdict has_shrunk_subspace(const QSpace& s);

}  // namespace liesdit
