#include "liesdit/sdit.hpp"

#include "liesdit/errors.hpp"
#include "liesdit/linalg.hpp"

namespace liesdit {

HittingSet hitting_set(std::size_t k, std::size_t n) {
    if (k == 0 || n == 0) throw Error(ErrorCode::invalid_argument, "hitting_set needs k >= 1 and n >= 1");
    HittingSet h;
    h.k = k;
    h.n = n;
    const std::size_t count = (k - 1) * n + 1;
    for (std::size_t a = 0; a < count; ++a) {
        const Rational alpha(static_cast<long>(a));
        QVec p(k);
        Rational power = Rational::one();
        for (std::size_t i = 0; i < k; ++i) {
            p[i] = power;
            power *= alpha;
        }
        h.alphas.push_back(alpha);
        h.points.push_back(std::move(p));
    }
    return h;
}

const char* verdict_name(Verdict v) { return v == Verdict::singular ? "Singular" : "NonSingular"; }

namespace {

struct HitScan {
    std::size_t max_rank = 0;
    RankWitness best;
    std::size_t evaluated = 0;
};

// Ranks of sum_i p_i C_i over the hitting set, stopping early at full rank.
HitScan scan_hitting_set(const QSpace& s, const QSpace& cartan) {
    HitScan scan;
    const std::size_t n = s.n();
    const HittingSet h = hitting_set(cartan.dim(), n);
    for (const QVec& p : h.points) {
        QMatrix m = cartan.element(p);
        const std::size_t r = rank(m);
        ++scan.evaluated;
        if (scan.evaluated == 1 || r > scan.max_rank) {
            scan.max_rank = r;
            scan.best.point = p;
            scan.best.matrix = std::move(m);
            scan.best.rank = r;
        }
        if (r == n) break;
    }
    if (scan.evaluated > 0) scan.best.coefficients = *s.coordinates(scan.best.matrix);
    return scan;
}

LieStructure lie_or_throw(const QSpace& s) {
    if (const auto failure = closure_check(s)) {
        throw Error(ErrorCode::not_closed, "not a Lie algebra: [B" + std::to_string(failure->i + 1) + ", B" +
                                               std::to_string(failure->j + 1) + "] leaves the span");
    }
    return LieStructure(s);
}

}  // namespace

SditVerdict sdit_decide(const QSpace& s, const CartanConfig& cfg) {
    const LieStructure lie = lie_or_throw(s);
    SditVerdict out;
    out.cartan = cartan_subalgebra(lie, cfg);
    out.cartan_basis = cartan_as_matrix_space(lie, out.cartan.subalgebra);
    if (out.cartan_basis.dim() == 0) {
        // Zero space (or zero Cartan, which only happens for the zero algebra).
        out.verdict = s.n() == 0 ? Verdict::nonsingular : Verdict::singular;
        return out;
    }
    HitScan scan = scan_hitting_set(s, out.cartan_basis);
    out.max_rank_over_hits = scan.max_rank;
    out.points_evaluated = scan.evaluated;
    if (scan.max_rank == s.n()) {
        out.verdict = Verdict::nonsingular;
        out.witness = std::move(scan.best);
    } else {
        out.verdict = Verdict::singular;
    }
    return out;
}

MaxRankReport semisimple_max_rank(const QSpace& s, const CartanConfig& cfg) {
    const LieStructure lie = lie_or_throw(s);
    if (!is_semisimple(lie)) {
        throw Error(ErrorCode::not_semisimple, "max rank is only computed for semisimple algebras (Killing form degenerate)");
    }
    MaxRankReport out;
    out.cartan = cartan_subalgebra(lie, cfg);
    out.cartan_basis = cartan_as_matrix_space(lie, out.cartan.subalgebra);
    if (out.cartan_basis.dim() == 0) return out;
    HitScan scan = scan_hitting_set(s, out.cartan_basis);
    out.max_rank = scan.max_rank;
    out.witness = std::move(scan.best);
    return out;
}

bool WeightDecomposition::complete() const {
    for (const auto& w : weights)
        if (!w.rational) return false;
    return true;
}

WeightDecomposition weights(const QSpace& cartan_basis, bool allow_irrational) {
    const std::size_t n = cartan_basis.n();
    const std::size_t k = cartan_basis.dim();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!commutator(cartan_basis[i], cartan_basis[j]).is_zero()) {
                throw Error(ErrorCode::not_commuting, "Cartan matrices " + std::to_string(i + 1) + " and " +
                                                          std::to_string(j + 1) + " do not commute");
            }

    std::vector<WeightSpace> pieces(1);
    pieces[0].space = QSubspace::full(n);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<WeightSpace> next;
        for (auto& piece : pieces) {
            if (!piece.rational || piece.space.dim() == 0) {
                next.push_back(std::move(piece));
                continue;
            }
            const QMatrix r = restrict_to(cartan_basis[t], piece.space);
            const std::size_t d = r.rows();
            const RationalRoots rr = rational_roots(char_poly(r));
            for (const auto& [lambda, mult] : rr.roots) {
                QMatrix shifted = r;
                for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lambda;
                QMatrix power = QMatrix::identity(d);
                for (std::size_t e = 0; e < mult; ++e) power = power * shifted;
                WeightSpace w;
                w.weight = piece.weight;
                w.weight.push_back(lambda);
                w.space = lift(piece.space, kernel(power));
                next.push_back(std::move(w));
            }
            if (rr.residual.size() > 1) {
                if (!allow_irrational) {
                    throw Error(ErrorCode::unsupported_spectrum,
                                "Cartan matrix " + std::to_string(t + 1) +
                                    " has an eigenvalue outside Q: factor " + poly_to_string(rr.residual));
                }
                WeightSpace w;
                w.weight = piece.weight;
                w.rational = false;
                w.irrational_at = t;
                w.residual_factor = poly_to_string(rr.residual);
                w.space = lift(piece.space, kernel(poly_eval(rr.residual, r)));
                next.push_back(std::move(w));
            }
        }
        pieces = std::move(next);
    }
    WeightDecomposition out;
    for (auto& p : pieces) {
        p.multiplicity = p.space.dim();
        if (p.multiplicity > 0) out.weights.push_back(std::move(p));
    }
    return out;
}

Verdict singular_via_weights(const WeightDecomposition& w) {
    for (const auto& piece : w.weights) {
        if (!piece.rational) continue;
        bool zero = true;
        for (const auto& v : piece.weight) zero = zero && v.is_zero();
        if (zero) return Verdict::singular;
    }
    return Verdict::nonsingular;
}

}  // namespace liesdit
