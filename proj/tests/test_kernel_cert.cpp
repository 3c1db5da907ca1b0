#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liesdit/errors.hpp"
#include "liesdit/families.hpp"
#include "liesdit/kernel_cert.hpp"
#include "test_support.hpp"

using namespace liesdit;
using liesdit::testing::Rng;

namespace {

// Evaluates B(x) v(x) (or v(x)^T B(x)) at random rational points. A nonzero
// polynomial of degree d+1 survives 40 random points with overwhelming odds.
bool vanishes_at_random_points(const QSpace& s, const KernelCertificate& c, std::uint64_t seed) {
    Rng rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
        QVec x;
        for (std::size_t i = 0; i < s.dim(); ++i) x.push_back(rng.rational(30, 7));
        const QMatrix b = s.element(x);
        QVec v(s.n());
        for (std::size_t a = 0; a < c.monomials().size(); ++a) {
            Rational mono = Rational::one();
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t e = 0; e < c.monomials()[a][i]; ++e) mono *= x[i];
            for (std::size_t r = 0; r < v.size(); ++r) v[r] += mono * c.vectors()[a][r];
        }
        const QVec out = c.side() == Side::right ? b * v : b.transpose() * v;
        if (!is_zero_vec(out)) return false;
    }
    return true;
}

std::vector<QVec> identity_vectors(std::size_t n) {
    std::vector<QVec> out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(unit_vec<Rational>(n, j));
    return out;
}

}  // namespace

TEST_CASE("system size counts C(m+d-1, d) * n unknowns") {
    const QSpace s = lambda_space(4);  // m = 6, n = 4
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto r = search_kernel_certificate(s, d, Side::right);
        CHECK(r.unknowns == monomial_count(6, d) * 4);
        CHECK(r.equations == monomial_count(6, d + 1) * 4);
    }
    CHECK(monomial_count(6, 1) == 6);
    CHECK(monomial_count(6, 2) == 21);
    CHECK(monomial_count(6, 3) == 56);
}

TEST_CASE("adjoint representations carry the tautological right certificate") {
    for (const char* name : {"sl2", "sl3", "so3"}) {
        CAPTURE(name);
        const QSpace s = adjoint_of(name);
        const auto c = find_kernel_certificate(s, 1, Side::right);
        REQUIRE(c.has_value());
        CHECK(verify_certificate(s, *c));
        CHECK(vanishes_at_random_points(s, *c, 11));
        CHECK(linker_cross_identity_check(s, *c));

        const KernelCertificate taut(Side::right, 1, s.dim(), s.n(), identity_vectors(s.dim()));
        CHECK(verify_certificate(s, taut));
        CHECK(linker_cross_identity_check(s, taut));
        CHECK(bracket_compatibility_check(s, taut));
    }
}

TEST_CASE("found degree-1 certificates satisfy the bracket identity on Lie algebras") {
    for (const auto& [name, s] : std::vector<std::pair<std::string, QSpace>>{
             {"adj-sl2", adjoint_of("sl2")}, {"adj-so3", adjoint_of("so3")}, {"lambda3", lambda_space(3)},
             {"heisenberg3", heisenberg(3)}, {"strict-upper", strict_upper_line()}}) {
        CAPTURE(name);
        for (Side side : {Side::right, Side::left}) {
            const auto c = find_kernel_certificate(s, 1, side);
            if (!c) continue;
            CHECK(vanishes_at_random_points(s, *c, 5));
            CHECK(linker_cross_identity_check(s, *c));
            CHECK(bracket_compatibility_check(s, *c));
        }
    }
}

TEST_CASE("sl(n) in its standard representation has no certificate") {
    for (std::size_t n : {2u, 3u}) {
        const QSpace s = sl_standard(n);
        for (std::size_t d = 1; d <= (n == 2 ? 3u : 2u); ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK_FALSE(find_kernel_certificate(s, d, Side::right).has_value());
            CHECK_FALSE(find_kernel_certificate(s, d, Side::left).has_value());
        }
    }
}

TEST_CASE("odd alternating spaces have a degree-(n-1)/2 certificate and none below") {
    const QSpace l3 = lambda_space(3);
    const auto c3 = find_kernel_certificate(l3, 1, Side::right);
    REQUIRE(c3.has_value());
    CHECK(vanishes_at_random_points(l3, *c3, 3));

    const QSpace l5 = lambda_space(5);
    CHECK_FALSE(find_kernel_certificate(l5, 1, Side::right).has_value());
    const auto c5 = find_kernel_certificate(l5, 2, Side::right);
    REQUIRE(c5.has_value());
    CHECK(verify_certificate(l5, *c5));
    CHECK(vanishes_at_random_points(l5, *c5, 4));
}

TEST_CASE("column-alternating spaces have the coordinate vector as a left certificate") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CAPTURE(seed);
        const QSpace s = column_alternating_space(random_alternating_family(4, seed));
        if (s.dim() != 4) continue;  // a dependent draw changes the coordinates
        const KernelCertificate coord(Side::left, 1, 4, 4, identity_vectors(4));
        CHECK(verify_certificate(s, coord));
        CHECK(vanishes_at_random_points(s, coord, seed));
        CHECK(linker_cross_identity_check(s, coord));

        const auto found = find_kernel_certificate(s, 1, Side::left);
        REQUIRE(found.has_value());
        CHECK(verify_certificate(s, *found));
        CHECK(vanishes_at_random_points(s, *found, seed + 100));
    }
    // With C_i the coordinate alternating basis of Lambda(3).
    const QSpace s = column_alternating_space(lambda_space(3).basis());
    REQUIRE(s.dim() == 3);
    const auto c = find_kernel_certificate(s, 1, Side::left);
    REQUIRE(c.has_value());
    CHECK(verify_certificate(s, *c));
}

TEST_CASE("perturbed certificates fail both checks") {
    const QSpace s = adjoint_of("sl2");
    auto c = find_kernel_certificate(s, 1, Side::right);
    REQUIRE(c.has_value());
    for (std::size_t a = 0; a < c->vectors().size(); ++a)
        for (std::size_t r = 0; r < s.n(); ++r) {
            auto vecs = c->vectors();
            vecs[a][r] += Rational::one();
            const KernelCertificate bad(Side::right, 1, s.dim(), s.n(), vecs);
            const bool ok = verify_certificate(s, bad);
            CHECK(ok == vanishes_at_random_points(s, bad, 9));
            CHECK_FALSE(ok);
        }
}

TEST_CASE("certificate construction and search validate input") {
    const QSpace s = adjoint_of("sl2");
    std::vector<QVec> zeros(3, QVec(3));
    try {
        KernelCertificate z(Side::right, 1, 3, 3, zeros);
        FAIL("zero certificate accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_certificate);
    }
    CHECK_THROWS_AS(KernelCertificate(Side::right, 1, 3, 3, std::vector<QVec>(2, QVec(3))), Error);
    try {
        search_kernel_certificate(s, 5, Side::right);
        FAIL("cap ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::guard_exceeded);
    }
    CHECK_THROWS_AS(search_kernel_certificate(s, 0, Side::right), Error);

    const KernelCertificate wrong(Side::right, 1, 2, 2, identity_vectors(2));
    CHECK_THROWS_AS(verify_certificate(s, wrong), Error);
}

TEST_CASE("bracket identity needs a closed space") {
    const QSpace s = column_alternating_space(random_alternating_family(4, 2));
    REQUIRE(s.dim() == 4);
    const KernelCertificate coord(Side::left, 1, 4, 4, identity_vectors(4));
    try {
        bracket_compatibility_check(s, coord);
        FAIL("expected not_closed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_closed);
    }
}
