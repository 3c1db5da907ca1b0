#include "liesdit/kernel_cert.hpp"

#include "liesdit/errors.hpp"

#include <map>

namespace liesdit {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

KernelCertificate::KernelCertificate(Side side, std::size_t degree, std::size_t m, std::size_t n,
                                     std::vector<QVec> vectors)
    : side_(side), degree_(degree), m_(m), n_(n), monomials_(liesdit::monomials(m, degree)), vectors_(std::move(vectors)) {
    if (vectors_.size() != monomials_.size()) {
        throw Error(ErrorCode::shape_mismatch, "certificate needs " + std::to_string(monomials_.size()) +
                                                   " coefficient vectors, got " + std::to_string(vectors_.size()));
    }
    bool nonzero = false;
    for (const auto& v : vectors_) {
        if (v.size() != n_) throw Error(ErrorCode::shape_mismatch, "certificate vector has the wrong length");
        nonzero = nonzero || !is_zero_vec(v);
    }
    if (!nonzero) throw Error(ErrorCode::invalid_certificate, "certificate is identically zero");
}

namespace {

// Matrix acting on v_a in the expansion: B_i for right certificates, B_i^T for left.
QMatrix acting(const QSpace& s, std::size_t i, Side side) { return side == Side::right ? s[i] : s[i].transpose(); }

}  // namespace

CertificateSearch search_kernel_certificate(const QSpace& s, std::size_t degree, Side side, std::size_t degree_cap) {
    if (degree == 0) throw Error(ErrorCode::invalid_argument, "certificate degree must be at least 1");
    if (degree > degree_cap) {
        throw Error(ErrorCode::guard_exceeded,
                    "degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(degree_cap));
    }
    const std::size_t m = s.dim(), n = s.n();
    const auto unknown_monos = monomials(m, degree);
    const auto eq_monos = monomials(m, degree + 1);
    std::map<Exponents, std::size_t> eq_index;
    for (std::size_t k = 0; k < eq_monos.size(); ++k) eq_index[eq_monos[k]] = k;

    CertificateSearch out;
    out.unknowns = unknown_monos.size() * n;
    out.equations = eq_monos.size() * n;
    if (m == 0) return out;  // B(x) = 0: every v works, but there are no variables to form one

    std::vector<QMatrix> act;
    for (std::size_t i = 0; i < m; ++i) act.push_back(acting(s, i, side));

    // Row (beta, r), column (a, c): coefficient of (v_a)_c in entry r of x^beta.
    QMatrix system(out.equations, out.unknowns);
    for (std::size_t a = 0; a < unknown_monos.size(); ++a) {
        for (std::size_t i = 0; i < m; ++i) {
            Exponents beta = unknown_monos[a];
            ++beta[i];
            const std::size_t b = eq_index.at(beta);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!act[i](r, c).is_zero()) system(b * n + r, a * n + c) += act[i](r, c);
        }
    }
    const QSubspace sol = kernel(system);
    out.solution_dim = sol.dim();
    if (sol.dim() == 0) return out;
    const QVec first = sol.vector(0);
    std::vector<QVec> vectors;
    for (std::size_t a = 0; a < unknown_monos.size(); ++a)
        vectors.emplace_back(first.begin() + static_cast<std::ptrdiff_t>(a * n),
                             first.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
    out.certificate.emplace(side, degree, m, n, std::move(vectors));
    return out;
}

std::optional<KernelCertificate> find_kernel_certificate(const QSpace& s, std::size_t degree, Side side,
                                                         std::size_t degree_cap) {
    return search_kernel_certificate(s, degree, side, degree_cap).certificate;
}

bool verify_certificate(const QSpace& s, const KernelCertificate& c) {
    if (c.variables() != s.dim() || c.n() != s.n()) {
        throw Error(ErrorCode::shape_mismatch, "certificate shape does not match the space");
    }
    std::map<Exponents, QVec> expansion;
    for (std::size_t a = 0; a < c.monomials().size(); ++a) {
        const QVec& v = c.vectors()[a];
        if (is_zero_vec(v)) continue;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            Exponents key = c.monomials()[a];
            ++key[i];
            const QVec term = c.side() == Side::right ? s[i] * v : s[i].transpose() * v;
            auto [it, fresh] = expansion.try_emplace(key, QVec(s.n()));
            it->second = axpy(Rational::one(), term, it->second);
        }
    }
    for (const auto& [mono, vec] : expansion)
        if (!is_zero_vec(vec)) return false;
    return true;
}

bool linker_cross_identity_check(const QSpace& s, const KernelCertificate& c) {
    if (c.degree() != 1) throw Error(ErrorCode::invalid_argument, "cross identity needs a degree-1 certificate");
    if (c.variables() != s.dim() || c.n() != s.n()) {
        throw Error(ErrorCode::shape_mismatch, "certificate shape does not match the space");
    }
    // Degree-1 monomials are x_1, ..., x_m in order, so v_i is vectors()[i].
    const auto& v = c.vectors();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const QMatrix bi = acting(s, i, c.side());
        for (std::size_t j = i; j < s.dim(); ++j) {
            const QMatrix bj = acting(s, j, c.side());
            if (!is_zero_vec(axpy(Rational::one(), bi * v[j], bj * v[i]))) return false;
        }
    }
    return true;
}

bool bracket_compatibility_check(const QSpace& s, const KernelCertificate& c) {
    if (c.degree() != 1) throw Error(ErrorCode::invalid_argument, "bracket identity needs a degree-1 certificate");
    if (c.variables() != s.dim() || c.n() != s.n()) {
        throw Error(ErrorCode::shape_mismatch, "certificate shape does not match the space");
    }
    const LieStructure lie(s);
    const auto& v = c.vectors();
    const std::size_t m = s.dim();
    for (std::size_t i = 0; i < m; ++i) {
        const QMatrix act = c.side() == Side::right ? s[i] : -s[i].transpose();
        for (std::size_t j = 0; j < m; ++j) {
            QVec lhs(s.n());
            for (std::size_t k = 0; k < m; ++k)
                if (!lie.constant(i, j, k).is_zero()) lhs = axpy(lie.constant(i, j, k), v[k], lhs);
            if (lhs != act * v[j]) return false;
        }
    }
    return true;
}

const char* route_name(SingularityRoute r) {
    switch (r) {
        case SingularityRoute::lie_cartan: return "lie-cartan";
        case SingularityRoute::kernel_certificate: return "kernel-certificate";
        case SingularityRoute::none: break;
    }
    return "none";
}

SingularityDecision decide_singularity(const QSpace& s, const CartanConfig& cfg, std::size_t max_degree) {
    SingularityDecision out;
    if (!closure_check(s)) {
        out.route = SingularityRoute::lie_cartan;
        out.lie = sdit_decide(s, cfg);
        out.verdict = out.lie->verdict;
        return out;
    }
    for (std::size_t d = 1; d <= max_degree; ++d)
        for (Side side : {Side::left, Side::right}) {
            auto c = find_kernel_certificate(s, d, side);
            if (c && verify_certificate(s, *c)) {
                out.route = SingularityRoute::kernel_certificate;
                out.verdict = Verdict::singular;
                out.certificate = std::move(c);
                return out;
            }
        }
    return out;
}

}  // namespace liesdit
