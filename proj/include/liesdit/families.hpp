#pragma once

#include "liesdit/lie.hpp"
#include "liesdit/monomials.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace liesdit {

/// Alternating matrices E_ij - E_ji, i < j (lexicographic).
QSpace lambda_space(std::size_t n);

/// sl(n) in the order H_1..H_{n-1} (H_i = E_ii - E_{i+1,i+1}), E_ij for i < j,
/// then E_ij for i > j. For n = 2 this is (h, e, f).
QSpace sl_standard(std::size_t n);

/// Image of sl(n) acting on homogeneous polynomials of degree `deg` by
/// E_ij -> x_i d/dx_j: generators rho(E_ij), i != j, then rho(H_i).
QSpace sl_monomial_rep_degree(std::size_t n, std::size_t deg);

/// The module of degree d*n monomials.
QSpace sl_monomial_rep(std::size_t n, std::size_t d);

/// Upper-triangular Heisenberg algebra: E_1j, E_jn (j = 2..n-1), then E_1n.
QSpace heisenberg(std::size_t n);

/// span{E12} in M(2).
QSpace strict_upper_line();

/// span{h, e} in sl(2).
QSpace borel_sl2();

/// Adjoint image of a named algebra: "sl2", "sl3" or "so3".
QSpace adjoint_of(const std::string& algebra);

/// n alternating n x n matrices with entries in [-3, 3], deterministic in seed.
std::vector<QMatrix> random_alternating_family(std::size_t n, std::uint64_t seed);

/// M_j (j = 1..n) with column i equal to C_i e_j. Throws Error(not_alternating).
QSpace column_alternating_space(const std::vector<QMatrix>& cs);

struct FamilyRequest {
    std::string family;  // lambda | sl-standard | sl-monomial | adjoint | heisenberg | strict-upper | borel-sl2 | column-alternating
    std::vector<std::string> params;
};

struct GeneratedSpace {
    QSpace space;
    std::map<std::string, std::string> metadata;  // name, family, params
};

/// Validates parameters per family. Throws Error(invalid_argument).
GeneratedSpace generate(const FamilyRequest& request);

}  // namespace liesdit
