#pragma once

#include "liesdit/matrix_space.hpp"
#include "liesdit/rational.hpp"
#include "liesdit/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liesdit {

using QMatrix = Matrix<Rational>;
using QVec = Vec<Rational>;
using QSpace = MatrixSpace<Rational>;
using QSubspace = Subspace<Rational>;

/// First basis pair (i, j), i < j, whose commutator leaves the span.
struct ClosureFailure {
    std::size_t i;
    std::size_t j;
};

/// nullopt when the space is closed under [A, B] = AB - BA.
std::optional<ClosureFailure> closure_check(const QSpace& s);

/// Structure constants of a matrix Lie algebra: [a_i, a_j] = sum_k c(i,j,k) a_k.
///
/// Elements of the algebra are handled as coefficient vectors over the stored
/// basis; subalgebras and ideals are coefficient-space subspaces of Q^m.
class LieStructure {
public:
    LieStructure() = default;
    /// Throws Error(not_closed) if the space is not a Lie algebra.
    explicit LieStructure(QSpace source);

    std::size_t dim() const { return m_; }
    const QSpace& source() const { return source_; }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * m_ + j) * m_ + k];
    }

    /// [x, y] in coefficient coordinates.
    QVec bracket(const QVec& x, const QVec& y) const;

    /// Ambient matrix of a coefficient vector.
    QMatrix to_matrix(const QVec& x) const { return source_.element(x); }

private:
    QSpace source_;
    std::size_t m_ = 0;
    std::vector<Rational> constants_;
};

inline LieStructure structure_constants(const QSpace& s) { return LieStructure(s); }

/// Matrix of ad_x in the stored basis: column j holds [x, a_j].
QMatrix ad_matrix(const LieStructure& lie, const QVec& x);

/// Span of ad_{a_1}, ..., ad_{a_m} as m x m matrices (dependent images dropped).
QSpace adjoint_space(const LieStructure& lie);

/// Gram matrix of kappa(x, y) = trace(ad_x ad_y).
QMatrix killing_form(const LieStructure& lie);

/// Cartan's criterion: nondegenerate Killing form (characteristic zero).
bool is_semisimple(const LieStructure& lie);

enum class SeriesKind { lower_central, derived };

struct SeriesReport {
    SeriesKind kind;
    std::vector<QSubspace> terms;  // terms[0] is the starting subalgebra
    bool stabilized = false;
    bool reaches_zero() const { return !terms.empty() && terms.back().dim() == 0; }
};

/// Series of the subalgebra h (defaults to the whole algebra).
SeriesReport lower_central_series(const LieStructure& lie, std::optional<QSubspace> h = std::nullopt);
SeriesReport derived_series(const LieStructure& lie, std::optional<QSubspace> h = std::nullopt);
bool is_nilpotent(const LieStructure& lie, std::optional<QSubspace> h = std::nullopt);
bool is_solvable(const LieStructure& lie, std::optional<QSubspace> h = std::nullopt);

bool is_subalgebra(const LieStructure& lie, const QSubspace& h);

/// n(h) = {x : [x, h] in h}. Throws Error(not_subalgebra).
QSubspace normalizer(const LieStructure& lie, const QSubspace& h);
bool is_self_normalizing(const LieStructure& lie, const QSubspace& h);

/// Smallest bracket-closed subspace containing the generators.
QSubspace generated_subalgebra(const LieStructure& lie, const std::vector<QVec>& generators);

/// Closure of span(basis, I if unital) under matrix products.
QSpace associative_envelope(const QSpace& s, bool unital);

/// Span of [x, y] over basis vectors of a and b.
QSubspace bracket_span(const LieStructure& lie, const QSubspace& a, const QSubspace& b);

}  // namespace liesdit
