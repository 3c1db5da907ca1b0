#include "liesdit/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

namespace liesdit {

namespace {

// Divisor enumeration is trial division up to sqrt; beyond this bound the
// caller gets a typed error instead of an unbounded search.
const mpz_class kDivisorLimit = mpz_class("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    if (v > kDivisorLimit) {
        throw Error(ErrorCode::unsupported_spectrum,
                    "coefficient " + v.get_str() + " too large for rational root search");
    }
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            mpz_class e = v / d;
            if (e != d) large.push_back(e);
        }
    }
    std::reverse(large.begin(), large.end());
    small.insert(small.end(), large.begin(), large.end());
    return small;
}

}  // namespace

RationalRoots rational_roots(const Poly<Rational>& input) {
    Poly<Rational> p = input;
    poly_trim(p);
    if (p.empty()) throw Error(ErrorCode::invalid_argument, "rational_roots of the zero polynomial");
    {
        const Rational lead_inv = p.back().inverse();
        for (auto& c : p) c *= lead_inv;
    }

    RationalRoots out;
    auto divide_out = [&p](const Rational& r) {
        std::size_t mult = 0;
        while (p.size() > 1 && poly_eval(p, r).is_zero()) {
            p = poly_divmod(p, Poly<Rational>{-r, Rational::one()}).first;
            ++mult;
        }
        return mult;
    };

    std::set<Rational> found;
    if (const std::size_t m0 = divide_out(Rational::zero()); m0 > 0) found.insert(Rational::zero());

    if (p.size() > 1) {
        // Integer primitive form: multiply through by the lcm of denominators.
        mpz_class l = 1;
        for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        const mpz_class a0 = (p.front() * Rational(l, 1)).num();
        const mpz_class an = (p.back() * Rational(l, 1)).num();
        const auto num_divs = positive_divisors(a0);
        const auto den_divs = positive_divisors(an);
        for (const auto& q : den_divs) {
            for (const auto& d : num_divs) {
                for (int s : {1, -1}) {
                    if (p.size() <= 1) break;
                    const Rational cand(d * s, q);
                    if (found.count(cand) != 0) continue;
                    if (divide_out(cand) > 0) found.insert(cand);
                }
            }
        }
    }

    // Multiplicities from the original polynomial, in ascending order.
    Poly<Rational> work = input;
    poly_trim(work);
    for (const auto& r : found) {
        std::size_t mult = 0;
        while (work.size() > 1 && poly_eval(work, r).is_zero()) {
            work = poly_divmod(work, Poly<Rational>{-r, Rational::one()}).first;
            ++mult;
        }
        out.roots.emplace_back(r, mult);
    }
    const Rational lead_inv = work.back().inverse();
    for (auto& c : work) c *= lead_inv;
    out.residual = std::move(work);
    return out;
}

std::size_t subspace_count(std::size_t n, std::size_t q, std::size_t cap) {
    // Gaussian binomials via [n,k] = [n-1,k-1] + q^k [n-1,k], saturated.
    auto sat_add = [cap](std::size_t a, std::size_t b) { return std::min(cap + 1, a + b); };
    auto sat_mul = [cap](std::size_t a, std::size_t b) {
        if (a != 0 && b > (cap + 1) / a) return cap + 1;
        return std::min(cap + 1, a * b);
    };
    std::vector<std::size_t> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::size_t> next(m + 1, 0);
        std::size_t qk = 1;
        for (std::size_t k = 0; k <= m; ++k) {
            const std::size_t left = (k >= 1) ? row[k - 1] : 0;
            const std::size_t right = (k < row.size()) ? sat_mul(qk, row[k]) : 0;
            next[k] = sat_add(left, right);
            qk = sat_mul(qk, q);
        }
        row = std::move(next);
    }
    std::size_t total = 0;
    for (auto v : row) total = sat_add(total, v);
    return total;
}

}  // namespace liesdit
