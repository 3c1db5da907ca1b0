#pragma once

#include "liesdit/errors.hpp"
#include "liesdit/linalg.hpp"
#include "liesdit/subspace.hpp"
#include "liesdit/zp.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liesdit {

inline constexpr std::size_t kDefaultSubspaceGuard = 1'000'000;

/// Streams every subspace of GF(P)^n exactly once, in canonical RREF profile
/// order: by dimension, then pivot set (lexicographic), then free entries
/// counted as an odometer. Single consumer.
template <std::uint32_t P>
class SubspaceEnumerator {
public:
    using F = Zp<P>;

    explicit SubspaceEnumerator(std::size_t n, std::size_t guard = kDefaultSubspaceGuard) : n_(n) {
        const std::size_t total = subspace_count(n, P, guard);
        if (total > guard) {
            throw Error(ErrorCode::guard_exceeded, "GF(" + std::to_string(P) + ")^" + std::to_string(n) +
                                                       " has more than " + std::to_string(guard) + " subspaces");
        }
        total_ = total;
        start_dimension(0);
    }

    std::size_t total() const { return total_; }

    std::optional<Subspace<F>> next() {
        if (done_) return std::nullopt;
        Subspace<F> current = build();
        advance();
        return current;
    }

    template <typename Fn>
    void for_each(Fn&& fn) {
        while (auto s = next()) fn(*s);
    }

private:
    void start_dimension(std::size_t k) {
        k_ = k;
        pivots_.resize(k);
        for (std::size_t i = 0; i < k; ++i) pivots_[i] = i;
        reset_free();
    }

    void reset_free() {
        free_.clear();
        std::vector<bool> is_pivot(n_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = pivots_[i] + 1; j < n_; ++j)
                if (!is_pivot[j]) free_.push_back({i, j});
        digits_.assign(free_.size(), 0);
    }

    Subspace<F> build() const {
        Matrix<F> m(k_, n_);
        for (std::size_t i = 0; i < k_; ++i) m(i, pivots_[i]) = F::one();
        for (std::size_t f = 0; f < free_.size(); ++f) m(free_[f].first, free_[f].second) = F(static_cast<long>(digits_[f]));
        return Subspace<F>::from_rref(std::move(m), pivots_);
    }

    bool next_pivots() {
        // Next k-combination of {0..n-1} in lexicographic order.
        std::size_t i = k_;
        while (i > 0) {
            --i;
            if (pivots_[i] < n_ - k_ + i) {
                ++pivots_[i];
                for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    void advance() {
        for (std::size_t f = free_.size(); f-- > 0;) {
            if (++digits_[f] < P) return;
            digits_[f] = 0;
        }
        if (next_pivots()) {
            reset_free();
            return;
        }
        if (k_ == n_) {
            done_ = true;
            return;
        }
        start_dimension(k_ + 1);
    }

    std::size_t n_;
    std::size_t total_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::vector<std::uint32_t> digits_;
    bool done_ = false;
};

/// Collects the full enumeration (convenience for small n).
template <std::uint32_t P>
std::vector<Subspace<Zp<P>>> enumerate_subspaces(std::size_t n, std::size_t guard = kDefaultSubspaceGuard) {
    SubspaceEnumerator<P> e(n, guard);
    std::vector<Subspace<Zp<P>>> out;
    out.reserve(e.total());
    e.for_each([&out](const Subspace<Zp<P>>& s) { out.push_back(s); });
    return out;
}

}  // namespace liesdit
