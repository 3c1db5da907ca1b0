#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liesdit/enumerate.hpp"
#include "liesdit/linalg.hpp"
#include "liesdit/zp.hpp"
#include "test_support.hpp"

using namespace liesdit;
using liesdit::testing::Q;
using liesdit::testing::Rng;

using QM = Matrix<Rational>;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Q("2/4") == Q("1/2"));
    CHECK(Q("2/4").to_string() == "1/2");
    CHECK(Q("3/-6").to_string() == "-1/2");
    CHECK(Q("-0").to_string() == "0");
    bool canonical = true;
    Rational::parse("2/4", &canonical);
    CHECK_FALSE(canonical);
    Rational::parse("-7/3", &canonical);
    CHECK(canonical);
    CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
}

TEST_CASE("prime field elements stay reduced") {
    CHECK(GF3(-1).value() == 2);
    CHECK(GF3(7).value() == 1);
    CHECK((GF3(2) * GF3(2)).value() == 1);
    CHECK((GF3(2).inverse() * GF3(2)).is_one());
    CHECK(GF2::from_rational(Q("3/5")).value() == 1);
    CHECK_THROWS(GF3::from_rational(Q("1/3")));
}

TEST_CASE("rref examples") {
    const auto id = echelon(QM::identity(3));
    CHECK(id.rref == QM::identity(3));
    CHECK(id.rank() == 3);

    const auto z = echelon(QM::zero(2, 2));
    CHECK(z.rref == QM::zero(2, 2));
    CHECK(z.rank() == 0);

    CHECK(rank(QM{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("Bareiss RREF agrees with Gauss-Jordan and is idempotent") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 7));
        const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(rows, cols))));
        const QM m = liesdit::testing::random_rank_matrix(rng, rows, cols, r);
        const auto fast = echelon(m);
        const auto oracle = echelon_gauss_jordan(m);
        CHECK(fast.rref == oracle.rref);
        CHECK(fast.pivots == oracle.pivots);
        CHECK(echelon(fast.rref).rref == fast.rref);
        // rank + nullity = cols
        CHECK(fast.rank() + kernel(m).dim() == cols);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const QM m = (t % 3 == 0) ? liesdit::testing::random_rank_matrix(rng, n, n, n - 1)
                                  : liesdit::testing::random_matrix(rng, n, n);
        CHECK(determinant(m) == liesdit::testing::det_cofactor(m));
    }
    CHECK(determinant(Matrix<GF3>{{1, 2}, {2, 1}}).is_zero());
}

TEST_CASE("kernel examples") {
    CHECK(kernel(QM::identity(2)).dim() == 0);
    CHECK(kernel(QM::zero(2, 2)).dim() == 2);
    const auto k = kernel(QM{{1, 1}, {0, 0}});
    REQUIRE(k.dim() == 1);
    CHECK(k.vector(0) == Vec<Rational>{Q("1"), Q("-1")});
}

TEST_CASE("solve_in_span") {
    const QM b1{{1, 0}, {0, -1}};
    const QM b2{{0, 1}, {0, 0}};
    auto c = solve_in_span<Rational>({b1}, b1 * Rational(2));
    REQUIRE(c);
    CHECK(*c == Vec<Rational>{Q("2")});
    c = solve_in_span<Rational>({b1, b2}, b1 + b2);
    REQUIRE(c);
    CHECK(*c == Vec<Rational>{Q("1"), Q("1")});
    CHECK_FALSE(solve_in_span<Rational>({b1, b2}, QM{{0, 0}, {1, 0}}).has_value());
    CHECK_THROWS_AS(solve_in_span<Rational>({b1}, QM::identity(3)), Error);
}

TEST_CASE("SpanCoordinates recovers coefficients") {
    Rng rng(3);
    std::vector<Vec<Rational>> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(liesdit::testing::random_matrix(rng, 1, 7).row_vec(0));
    SpanCoordinates<Rational> coords(vs, 7);
    const Vec<Rational> c{Q("1/2"), Q("-3"), Q("0"), Q("7/5")};
    Vec<Rational> v(7);
    for (int i = 0; i < 4; ++i) v = axpy(c[i], vs[i], v);
    auto got = coords(v);
    REQUIRE(got);
    CHECK(*got == c);
    v[0] += Rational(1000);
    CHECK_FALSE(coords(v).has_value());
}

TEST_CASE("subspace sum and intersection") {
    const auto line1 = Subspace<Rational>::span(2, {{Q("1"), Q("0")}});
    const auto line2 = Subspace<Rational>::span(2, {{Q("1"), Q("1")}});
    CHECK(subspace_sum(line1, line1) == line1);
    CHECK(subspace_intersection(line1, line1) == line1);
    CHECK(subspace_sum(line1, line2).dim() == 2);
    CHECK(subspace_intersection(line1, line2).dim() == 0);
    CHECK_THROWS_AS(subspace_sum(line1, Subspace<Rational>::full(3)), Error);

    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const auto u = liesdit::testing::random_subspace(rng, 4, 4);
        const auto v = liesdit::testing::random_subspace(rng, 4, 4);
        const auto s = subspace_sum(u, v);
        const auto i = subspace_intersection(u, v);
        CHECK(i.dim() + s.dim() == u.dim() + v.dim());
        CHECK(u.contains(i));
        CHECK(v.contains(i));
        CHECK(s.contains(u));
        CHECK(s.contains(v));
    }
}

TEST_CASE("modularity on all pairs of subspaces of GF(2)^3") {
    const auto all = enumerate_subspaces<2>(3);
    for (const auto& u : all)
        for (const auto& v : all)
            CHECK(subspace_intersection(u, v).dim() + subspace_sum(u, v).dim() == u.dim() + v.dim());
}

TEST_CASE("subspace enumeration counts") {
    // Gaussian binomial sums: 1+3+1, 1+7+7+1.
    CHECK(enumerate_subspaces<2>(2).size() == 5);
    CHECK(enumerate_subspaces<2>(3).size() == 16);
    CHECK(enumerate_subspaces<3>(1).size() == 2);
    CHECK(enumerate_subspaces<5>(1).size() == 2);
    CHECK(subspace_count(5, 3) == 1 + 121 + 1210 + 1210 + 121 + 1);
    CHECK(enumerate_subspaces<3>(3).size() == subspace_count(3, 3));

    // Each subspace exactly once.
    const auto all = enumerate_subspaces<3>(3);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);

    // Every vector of GF(3)^3 lies in exactly (number of subspaces containing a fixed line)
    // subspaces; sanity-check by comparing with RREF recomputation.
    for (const auto& s : all) CHECK(Subspace<GF3>::row_space(s.basis()) == s);

    CHECK_THROWS_AS(SubspaceEnumerator<2>(30), Error);
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(QM::diagonal({Q("1"), Q("-1")})) == Poly<Rational>{Q("-1"), Q("0"), Q("1")});
    CHECK(char_poly(QM::zero(2, 2)) == Poly<Rational>{Q("0"), Q("0"), Q("1")});
    // ad_h for sl(2) in basis (h, e, f): x (x - 2)(x + 2) = x^3 - 4x
    CHECK(char_poly(QM::diagonal({Q("0"), Q("2"), Q("-2")})) == Poly<Rational>{Q("0"), Q("-4"), Q("0"), Q("1")});
    CHECK_THROWS_AS(char_poly(QM(2, 3)), Error);

    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        const QM m = liesdit::testing::random_matrix(rng, 4, 4);
        const auto p = char_poly(m);
        CHECK(p == liesdit::testing::char_poly_faddeev(m));
        CHECK(poly_eval(p, m).is_zero());  // Cayley-Hamilton
    }
    // Matrices that need a Hessenberg row swap.
    const QM sparse{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK(char_poly(sparse) == liesdit::testing::char_poly_faddeev(sparse));
}

TEST_CASE("rational root extraction") {
    // (x - 1/2)^2 (x + 3) x (x^2 + 1)
    Poly<Rational> p{Q("1")};
    p = poly_mul(p, Poly<Rational>{Q("-1/2"), Q("1")});
    p = poly_mul(p, Poly<Rational>{Q("-1/2"), Q("1")});
    p = poly_mul(p, Poly<Rational>{Q("3"), Q("1")});
    p = poly_mul(p, Poly<Rational>{Q("0"), Q("1")});
    p = poly_mul(p, Poly<Rational>{Q("1"), Q("0"), Q("1")});
    const auto rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots[0] == std::pair<Rational, std::size_t>{Q("-3"), 1});
    CHECK(rr.roots[1] == std::pair<Rational, std::size_t>{Q("0"), 1});
    CHECK(rr.roots[2] == std::pair<Rational, std::size_t>{Q("1/2"), 2});
    CHECK(rr.residual == Poly<Rational>{Q("1"), Q("0"), Q("1")});
}
