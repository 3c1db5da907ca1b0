#pragma once

#include "liesdit/cartan.hpp"
#include "liesdit/lie.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liesdit {

/// Points (1, a, ..., a^(k-1)) for a in {0, 1, ..., (k-1) n}. A nonzero product
/// of at most n linear forms in k variables is nonzero on at least one of them.
struct HittingSet {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<Rational> alphas;
    std::vector<QVec> points;
};

HittingSet hitting_set(std::size_t k, std::size_t n);

enum class Verdict { singular, nonsingular };

const char* verdict_name(Verdict v);

struct RankWitness {
    QVec point;        // coefficients over the Cartan basis
    QVec coefficients; // the same element in the coordinates of the input basis
    QMatrix matrix;
    std::size_t rank = 0;
};

struct SditVerdict {
    Verdict verdict = Verdict::singular;
    std::optional<RankWitness> witness;  // present iff nonsingular
    CartanResult cartan;
    QSpace cartan_basis;
    std::size_t max_rank_over_hits = 0;
    std::size_t points_evaluated = 0;
};

/// Cartan subalgebra, hitting set with k = dim(Cartan) and degree bound n,
/// exact rank of each combination. Throws Error(not_closed) when the space
/// is not a Lie algebra.
SditVerdict sdit_decide(const QSpace& s, const CartanConfig& cfg = {});

struct MaxRankReport {
    std::size_t max_rank = 0;
    RankWitness witness;
    CartanResult cartan;
    QSpace cartan_basis;
};

/// Maximum rank of a semisimple matrix Lie algebra, read off its Cartan
/// subalgebra on the hitting set. Throws Error(not_semisimple).
MaxRankReport semisimple_max_rank(const QSpace& s, const CartanConfig& cfg = {});

/// One simultaneous generalized eigenspace of a commuting family.
///
/// When `rational` is false the piece collects the part of the module on
/// which basis matrix `irrational_at` has no rational eigenvalue; its weight
/// vector is only known on the preceding matrices and, because that matrix
/// has only nonzero eigenvalues there, no vector in the piece has weight 0.
struct WeightSpace {
    std::vector<Rational> weight;
    bool rational = true;
    std::size_t irrational_at = 0;
    std::string residual_factor;  // rational-root-free factor, when irrational
    std::size_t multiplicity = 0;
    QSubspace space;
};

struct WeightDecomposition {
    std::vector<WeightSpace> weights;
    bool complete() const;
};

/// Simultaneous generalized eigenspaces of the commuting matrices of
/// `cartan_basis`. Strict mode throws Error(unsupported_spectrum) on the first
/// characteristic polynomial with an irrational factor; partial mode keeps such
/// parts as irrational pieces. Throws Error(not_commuting).
WeightDecomposition weights(const QSpace& cartan_basis, bool allow_irrational = false);

/// Singular iff the zero weight occurs.
Verdict singular_via_weights(const WeightDecomposition& w);

}  // namespace liesdit
