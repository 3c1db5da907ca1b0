#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liesdit/families.hpp"
#include "liesdit/lie.hpp"
#include "test_support.hpp"

using namespace liesdit;
using liesdit::testing::Q;
using liesdit::testing::Rng;

namespace {

QVec coeffs(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

QVec random_coeffs(Rng& rng, std::size_t m) {
    QVec v(m);
    for (auto& x : v) x = rng.rational(4, 2);
    return v;
}

std::vector<std::pair<std::string, QSpace>> closed_examples() {
    return {{"sl2", sl_standard(2)},     {"sl3", sl_standard(3)},         {"heisenberg3", heisenberg(3)},
            {"heisenberg4", heisenberg(4)}, {"lambda3", lambda_space(3)}, {"lambda4", lambda_space(4)},
            {"borel", borel_sl2()},      {"mono21", sl_monomial_rep(2, 1)}, {"adj-sl2", adjoint_of("sl2")}};
}

// Bracket of matrix elements computed directly, mapped back to coordinates.
QVec matrix_bracket(const LieStructure& lie, const QVec& x, const QVec& y) {
    return *lie.source().coordinates(commutator(lie.to_matrix(x), lie.to_matrix(y)));
}

}  // namespace

TEST_CASE("closure_check") {
    CHECK_FALSE(closure_check(lambda_space(3)).has_value());
    const QSpace bad(3, {QMatrix::unit(3, 0, 1), QMatrix::unit(3, 1, 2)});
    const auto fail = closure_check(bad);
    REQUIRE(fail.has_value());
    CHECK(fail->i == 0);
    CHECK(fail->j == 1);
    CHECK_FALSE(closure_check(QSpace(2, {QMatrix{{1, 2}, {3, 4}}})).has_value());
    CHECK_THROWS_AS(LieStructure{bad}, Error);
}

TEST_CASE("structure constants of sl(2)") {
    const LieStructure sl2(sl_standard(2));  // (h, e, f)
    CHECK(sl2.bracket(coeffs({1, 0, 0}), coeffs({0, 1, 0})) == coeffs({0, 2, 0}));
    CHECK(sl2.bracket(coeffs({1, 0, 0}), coeffs({0, 0, 1})) == coeffs({0, 0, -2}));
    CHECK(sl2.bracket(coeffs({0, 1, 0}), coeffs({0, 0, 1})) == coeffs({1, 0, 0}));
}

TEST_CASE("structure constants of abelian and Heisenberg algebras") {
    const LieStructure diag(QSpace(3, {QMatrix::unit(3, 0, 0), QMatrix::unit(3, 1, 1)}));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) CHECK(diag.constant(i, j, k).is_zero());

    const LieStructure h(heisenberg(3));  // E12, E23, E13
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                if (!h.constant(i, j, k).is_zero()) ++nonzero;
    CHECK(nonzero == 2);
    CHECK(h.constant(0, 1, 2) == Q("1"));
    CHECK(h.constant(1, 0, 2) == Q("-1"));
}

TEST_CASE("structure constants: antisymmetry, Jacobi, round trip") {
    Rng rng(101);
    for (const auto& [name, space] : closed_examples()) {
        CAPTURE(name);
        const LieStructure lie(space);
        const std::size_t m = lie.dim();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) CHECK(lie.constant(i, j, k) == -lie.constant(j, i, k));
        // Jacobi on basis triples via the constants alone.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    const QVec a = unit_vec<Rational>(m, i), b = unit_vec<Rational>(m, j), c = unit_vec<Rational>(m, k);
                    QVec s = lie.bracket(a, lie.bracket(b, c));
                    s = axpy(Rational::one(), lie.bracket(b, lie.bracket(c, a)), s);
                    s = axpy(Rational::one(), lie.bracket(c, lie.bracket(a, b)), s);
                    CHECK(is_zero_vec(s));
                }
        for (int t = 0; t < 5; ++t) {
            const QVec x = random_coeffs(rng, m), y = random_coeffs(rng, m);
            CHECK(lie.bracket(x, y) == matrix_bracket(lie, x, y));
        }
    }
}

TEST_CASE("ad_matrix") {
    const LieStructure sl2(sl_standard(2));
    CHECK(ad_matrix(sl2, coeffs({0, 0, 0})).is_zero());
    CHECK(ad_matrix(sl2, coeffs({1, 0, 0})) == QMatrix::diagonal(coeffs({0, 2, -2})));
    CHECK_THROWS_AS(ad_matrix(sl2, coeffs({1, 0})), Error);

    Rng rng(7);
    for (const auto& [name, space] : closed_examples()) {
        CAPTURE(name);
        const LieStructure lie(space);
        for (int t = 0; t < 4; ++t) {
            const QVec x = random_coeffs(rng, lie.dim()), y = random_coeffs(rng, lie.dim());
            CHECK(is_zero_vec(ad_matrix(lie, x) * x));
            CHECK(ad_matrix(lie, x) * y == lie.bracket(x, y));
            CHECK(ad_matrix(lie, lie.bracket(x, y)) == commutator(ad_matrix(lie, x), ad_matrix(lie, y)));
        }
    }
}

TEST_CASE("adjoint_space dimensions") {
    CHECK(adjoint_space(LieStructure(sl_standard(2))).dim() == 3);
    CHECK(adjoint_space(LieStructure(QSpace(2, {QMatrix::unit(2, 0, 0), QMatrix::unit(2, 1, 1)}))).dim() == 0);
    CHECK(adjoint_space(LieStructure(heisenberg(3))).dim() == 2);
}

TEST_CASE("Killing form") {
    const QMatrix k = killing_form(LieStructure(sl_standard(2)));
    CHECK(k == QMatrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
    CHECK(determinant(k) == Q("-128"));
    CHECK(killing_form(LieStructure(QSpace(2, {QMatrix::unit(2, 0, 0)}))).is_zero());
    CHECK(rank(killing_form(LieStructure(heisenberg(3)))) < 3);

    CHECK(is_semisimple(LieStructure(sl_standard(2))));
    CHECK(is_semisimple(LieStructure(lambda_space(3))));
    CHECK_FALSE(is_semisimple(LieStructure(heisenberg(3))));
    CHECK_FALSE(is_semisimple(LieStructure(borel_sl2())));

    Rng rng(9);
    for (const auto& [name, space] : closed_examples()) {
        CAPTURE(name);
        const LieStructure lie(space);
        const QMatrix kf = killing_form(lie);
        CHECK(kf == kf.transpose());
        auto kappa = [&](const QVec& a, const QVec& b) { return dot(a, kf * b); };
        for (int t = 0; t < 4; ++t) {
            const QVec x = random_coeffs(rng, lie.dim()), y = random_coeffs(rng, lie.dim()),
                       z = random_coeffs(rng, lie.dim());
            CHECK((kappa(lie.bracket(x, y), z) + kappa(y, lie.bracket(x, z))).is_zero());
        }
    }
}

TEST_CASE("series, nilpotency, solvability") {
    const LieStructure h(heisenberg(3));
    const auto lcs = lower_central_series(h);
    REQUIRE(lcs.terms.size() == 3);
    CHECK(lcs.terms[1] == QSubspace::span(3, {coeffs({0, 0, 1})}));
    CHECK(lcs.terms[2].dim() == 0);
    CHECK(lcs.stabilized);
    CHECK(is_nilpotent(h));

    const LieStructure b(borel_sl2());
    CHECK(is_solvable(b));
    CHECK_FALSE(is_nilpotent(b));
    CHECK(lower_central_series(b).terms.back() == QSubspace::span(2, {coeffs({0, 1})}));

    const LieStructure sl2(sl_standard(2));
    CHECK_FALSE(is_solvable(sl2));
    CHECK_FALSE(is_nilpotent(sl2));
    CHECK(derived_series(sl2).terms.back().dim() == 3);

    for (const auto& [name, space] : closed_examples()) {
        const auto r = derived_series(LieStructure(space));
        for (std::size_t i = 1; i < r.terms.size(); ++i) CHECK(r.terms[i].dim() < r.terms[i - 1].dim());
    }
}

TEST_CASE("normalizer") {
    const LieStructure sl2(sl_standard(2));
    const auto hline = QSubspace::span(3, {coeffs({1, 0, 0})});
    CHECK(normalizer(sl2, hline) == hline);
    CHECK(is_self_normalizing(sl2, hline));
    const auto eline = QSubspace::span(3, {coeffs({0, 1, 0})});
    CHECK(normalizer(sl2, eline) == QSubspace::span(3, {coeffs({1, 0, 0}), coeffs({0, 1, 0})}));
    CHECK_FALSE(is_self_normalizing(sl2, eline));
    CHECK(normalizer(sl2, QSubspace::full(3)) == QSubspace::full(3));
    CHECK_THROWS_AS(normalizer(sl2, QSubspace::span(3, {coeffs({0, 1, 0}), coeffs({0, 0, 1})})), Error);
}

TEST_CASE("generated_subalgebra") {
    const LieStructure sl2(sl_standard(2));
    CHECK(generated_subalgebra(sl2, {coeffs({0, 1, 0}), coeffs({0, 0, 1})}).dim() == 3);
    CHECK(generated_subalgebra(sl2, {coeffs({1, 0, 0})}).dim() == 1);
    const LieStructure ab(QSpace(3, {QMatrix::unit(3, 0, 0), QMatrix::unit(3, 1, 1), QMatrix::unit(3, 2, 2)}));
    const std::vector<QVec> gens{coeffs({1, 1, 0}), coeffs({0, 2, 3})};
    CHECK(generated_subalgebra(ab, gens) == QSubspace::span(3, gens));

    Rng rng(41);
    for (const auto& [name, space] : closed_examples()) {
        CAPTURE(name);
        const LieStructure lie(space);
        const std::vector<QVec> g{random_coeffs(rng, lie.dim())};
        const auto sub = generated_subalgebra(lie, g);
        CHECK(sub.contains(g[0]));
        CHECK(is_subalgebra(lie, sub));
    }
    // Two random elements of sl(3) generate all of it.
    const LieStructure sl3(sl_standard(3));
    CHECK(generated_subalgebra(sl3, {random_coeffs(rng, 8), random_coeffs(rng, 8)}).dim() == 8);
}

TEST_CASE("associative envelope") {
    CHECK(associative_envelope(sl_standard(2), true).dim() == 4);
    const auto env = associative_envelope(strict_upper_line(), true);
    CHECK(env.dim() == 2);
    CHECK(env.contains(QMatrix::identity(2)));
    CHECK(env.contains(QMatrix::unit(2, 0, 1)));
    CHECK(associative_envelope(QSpace(3, {}), true).dim() == 1);
    CHECK(associative_envelope(lambda_space(3), true).dim() == 9);
}

TEST_CASE("common kernel and image space") {
    CHECK(image_space(lambda_space(3), QSubspace::full(3)) == QSubspace::full(3));
    CHECK(image_space(strict_upper_line(), QSubspace::span(2, {coeffs({0, 1})})) == QSubspace::span(2, {coeffs({1, 0})}));
    const QSpace s(3, {QMatrix::unit(3, 0, 1), QMatrix::unit(3, 0, 2)});
    CHECK(common_kernel(s) == QSubspace::span(3, {coeffs({1, 0, 0})}));

    Rng rng(77);
    const QSpace l4 = lambda_space(4);
    for (int t = 0; t < 30; ++t) {
        const auto u1 = liesdit::testing::random_subspace(rng, 4, 2);
        const auto u2 = liesdit::testing::random_subspace(rng, 4, 2);
        CHECK(image_space(l4, subspace_sum(u1, u2)) == subspace_sum(image_space(l4, u1), image_space(l4, u2)));
    }
}

TEST_CASE("dependent generators are reduced with a warning") {
    const QSpace s(2, {QMatrix::unit(2, 0, 1), QMatrix::unit(2, 0, 1) * Q("3"), QMatrix::unit(2, 1, 0)});
    CHECK(s.dim() == 2);
    REQUIRE(s.warnings().size() == 1);
    CHECK(s.warnings()[0].find("generator 1") != std::string::npos);
    CHECK_THROWS_AS(QSpace(2, {QMatrix::identity(3)}), Error);
}
