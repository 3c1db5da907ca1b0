#pragma once

// Small matrix spaces reused across the shrunk-subspace and acceptance suites.

#include "liesdit/families.hpp"
#include "liesdit/matrix_space.hpp"

#include <string>
#include <utility>
#include <vector>

namespace liesdit::testing {

inline QMatrix E(std::size_t n, std::size_t i, std::size_t j) { return QMatrix::unit(n, i - 1, j - 1); }

/// span{E13, E23}: kills <e1, e2>, image of Q^3 is <e1, e2>.
inline QSpace upper_column_space() { return QSpace(3, {E(3, 1, 3), E(3, 2, 3)}); }

/// span{E11, E12, E13, E23, E33}: flag 0 < <e1> < <e1,e2> < Q^3 with zero middle factor.
inline QSpace middle_trivial_space() {
    return QSpace(3, {E(3, 1, 1), E(3, 1, 2), E(3, 1, 3), E(3, 2, 3), E(3, 3, 3)});
}

inline std::vector<std::pair<std::string, QSpace>> shrunk_fixtures() {
    return {{"span{E13,E23}", upper_column_space()},
            {"span{E11,E12,E13,E23,E33}", middle_trivial_space()},
            {"Lambda(3)", lambda_space(3)}};
}

inline QSubspace coordinate_flag(std::size_t n, std::size_t k) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(unit_vec<Rational>(n, i));
    return QSubspace::span(n, rows);
}

}  // namespace liesdit::testing
