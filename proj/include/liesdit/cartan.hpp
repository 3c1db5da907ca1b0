#pragma once

#include "liesdit/lie.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace liesdit {

struct CartanConfig {
    std::vector<Rational> omega;  // trial values c; empty means {0, 1, ..., m}
    std::size_t max_rounds = 4;
    std::size_t enlarge_factor = 2;

    /// {0, 1, ..., size - 1}
    static CartanConfig with_omega_size(std::size_t size);
};

struct DescentStep {
    QVec element;
    std::size_t fitting_dim;
};

struct CartanResult {
    QSubspace subalgebra;  // coefficient space
    QVec regular_element;
    bool verified = false;
    std::vector<DescentStep> descent_trace;
};

/// F_0(ad_x): kernel of ad_x^k once the kernels stabilize (k <= dim).
QSubspace fitting_null(const LieStructure& lie, const QVec& x);

/// ad_y restricted to the ad_y-invariant subspace k, in the basis of k.
QMatrix restricted_ad(const LieStructure& lie, const QVec& y, const QSubspace& k);

bool is_nilpotent_matrix(const QMatrix& a);

/// Nilpotent and self-normalizing. Throws Error(not_subalgebra).
bool verify_cartan(const LieStructure& lie, const QSubspace& h);

/// Regular-element descent. Every returned subalgebra has passed
/// verify_cartan; throws Error(descent_stalled) if the trial set cannot be
/// enlarged enough within max_rounds.
CartanResult cartan_subalgebra(const LieStructure& lie, const CartanConfig& cfg = {});

/// Ambient matrices spanning a coefficient-space subspace.
QSpace cartan_as_matrix_space(const LieStructure& lie, const QSubspace& h);

}  // namespace liesdit
