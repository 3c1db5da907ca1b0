#pragma once

#include "liesdit/lie.hpp"
#include "liesdit/monomials.hpp"
#include "liesdit/sdit.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace liesdit {

enum class Side { left, right };

const char* side_name(Side s);

/// v(x) = sum over degree-d monomials x^a of x^a v_a, with v_a in Q^n.
/// Right certificates satisfy B(x) v(x) = 0, left ones v(x)^T B(x) = 0,
/// where B(x) = sum_i x_i B_i.
class KernelCertificate {
public:
    /// Throws Error(invalid_certificate) if every v_a is zero, and
    /// Error(shape_mismatch) if the vector count or lengths are inconsistent.
    KernelCertificate(Side side, std::size_t degree, std::size_t m, std::size_t n, std::vector<QVec> vectors);

    Side side() const { return side_; }
    std::size_t degree() const { return degree_; }
    std::size_t variables() const { return m_; }
    std::size_t n() const { return n_; }
    const std::vector<Exponents>& monomials() const { return monomials_; }
    const std::vector<QVec>& vectors() const { return vectors_; }

private:
    Side side_;
    std::size_t degree_;
    std::size_t m_;
    std::size_t n_;
    std::vector<Exponents> monomials_;  // graded-lex
    std::vector<QVec> vectors_;         // one per monomial
};

inline constexpr std::size_t kDefaultDegreeCap = 4;

struct CertificateSearch {
    std::size_t unknowns = 0;   // C(m+d-1, d) * n
    std::size_t equations = 0;  // C(m+d, d+1) * n
    std::size_t solution_dim = 0;
    std::optional<KernelCertificate> certificate;
};

/// Builds the homogeneous system for the coefficients of v and returns the
/// first vector of the canonical (RREF) kernel basis. Throws
/// Error(guard_exceeded) when d exceeds the cap and Error(invalid_argument)
/// when d = 0.
CertificateSearch search_kernel_certificate(const QSpace& s, std::size_t degree, Side side,
                                            std::size_t degree_cap = kDefaultDegreeCap);

std::optional<KernelCertificate> find_kernel_certificate(const QSpace& s, std::size_t degree, Side side,
                                                         std::size_t degree_cap = kDefaultDegreeCap);

/// Expands B(x) v(x) (or v(x)^T B(x)) monomial by monomial and checks that
/// every coefficient vector vanishes. Throws Error(shape_mismatch).
bool verify_certificate(const QSpace& s, const KernelCertificate& c);

/// Degree-1 polarized identity on all basis pairs i <= j:
/// B_i v_j + B_j v_i = 0 (right) or v_i^T B_j + v_j^T B_i = 0 (left).
bool linker_cross_identity_check(const QSpace& s, const KernelCertificate& c);

/// For a degree-1 certificate psi(a_i) = v_i on a Lie algebra with basis a_i
/// acting through B_i: psi([a_i, a_j]) = B_i v_j on every basis pair (right),
/// or psi([a_i, a_j]) = -B_i^T v_j (left, the dual action). Throws
/// Error(not_closed) if the space is not a Lie algebra.
bool bracket_compatibility_check(const QSpace& s, const KernelCertificate& c);

enum class SingularityRoute { lie_cartan, kernel_certificate, none };

const char* route_name(SingularityRoute r);

struct SingularityDecision {
    SingularityRoute route = SingularityRoute::none;
    std::optional<Verdict> verdict;  // nullopt iff route is none
    std::optional<SditVerdict> lie;
    std::optional<KernelCertificate> certificate;
};

/// Closed spaces go through sdit_decide. Other spaces can only be shown
/// singular: certificates are tried for d = 1..max_degree, left before right
/// at each degree; without one the route is none.
SingularityDecision decide_singularity(const QSpace& s, const CartanConfig& cfg = {}, std::size_t max_degree = 2);

}  // namespace liesdit
