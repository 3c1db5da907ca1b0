#include "liesdit/families.hpp"

#include "liesdit/errors.hpp"

#include <charconv>
#include <random>

namespace liesdit {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorCode::invalid_argument, msg);
}

QMatrix unit(std::size_t n, std::size_t i, std::size_t j) { return QMatrix::unit(n, i, j); }

std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc() && ptr == s.data() + s.size(), what + " must be a non-negative integer, got '" + s + "'");
    return v;
}

}  // namespace

QSpace lambda_space(std::size_t n) {
    require(n >= 2, "lambda: n must be at least 2");
    std::vector<QMatrix> mats;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) mats.push_back(unit(n, i, j) - unit(n, j, i));
    return QSpace(n, mats);
}

QSpace sl_standard(std::size_t n) {
    require(n >= 2, "sl-standard: n must be at least 2");
    std::vector<QMatrix> mats;
    for (std::size_t i = 0; i + 1 < n; ++i) mats.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) mats.push_back(unit(n, i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) mats.push_back(unit(n, i, j));
    return QSpace(n, mats);
}

QSpace sl_monomial_rep_degree(std::size_t n, std::size_t deg) {
    require(n >= 2, "sl-monomial: n must be at least 2");
    const auto mons = monomials(n, deg);
    const std::size_t dim = mons.size();
    require(dim <= 200, "sl-monomial: module dimension " + std::to_string(dim) + " exceeds the guard 200");
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < dim; ++k) index[mons[k]] = k;

    // x_i d/dx_j sends x^e to e_j x^(e + e_i - e_j).
    auto rho = [&](std::size_t i, std::size_t j) {
        QMatrix m(dim, dim);
        for (std::size_t c = 0; c < dim; ++c) {
            std::vector<std::size_t> e = mons[c];
            if (e[j] == 0) continue;
            const long coeff = static_cast<long>(e[j]);
            --e[j];
            ++e[i];
            m(index.at(e), c) += Rational(coeff);
        }
        return m;
    };
    std::vector<QMatrix> mats;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) mats.push_back(rho(i, j));
    for (std::size_t i = 0; i + 1 < n; ++i) mats.push_back(rho(i, i) - rho(i + 1, i + 1));
    return QSpace(dim, mats);
}

QSpace sl_monomial_rep(std::size_t n, std::size_t d) {
    require(d >= 1, "sl-monomial: d must be at least 1");
    return sl_monomial_rep_degree(n, d * n);
}

QSpace heisenberg(std::size_t n) {
    require(n >= 3, "heisenberg: n must be at least 3");
    std::vector<QMatrix> mats;
    for (std::size_t j = 1; j + 1 < n; ++j) mats.push_back(unit(n, 0, j));
    for (std::size_t j = 1; j + 1 < n; ++j) mats.push_back(unit(n, j, n - 1));
    mats.push_back(unit(n, 0, n - 1));
    return QSpace(n, mats);
}

QSpace strict_upper_line() { return QSpace(2, {unit(2, 0, 1)}); }

QSpace borel_sl2() { return QSpace(2, {unit(2, 0, 0) - unit(2, 1, 1), unit(2, 0, 1)}); }

QSpace adjoint_of(const std::string& algebra) {
    if (algebra == "sl2") return adjoint_space(LieStructure(sl_standard(2)));
    if (algebra == "sl3") return adjoint_space(LieStructure(sl_standard(3)));
    if (algebra == "so3") return adjoint_space(LieStructure(lambda_space(3)));
    throw Error(ErrorCode::invalid_argument, "adjoint: unknown algebra '" + algebra + "' (expected sl2, sl3 or so3)");
}

std::vector<QMatrix> random_alternating_family(std::size_t n, std::uint64_t seed) {
    require(n >= 2, "column-alternating: n must be at least 2");
    std::mt19937_64 rng(seed);
    std::vector<QMatrix> out;
    for (std::size_t k = 0; k < n; ++k) {
        QMatrix c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const long v = static_cast<long>(rng() % 7) - 3;
                c(i, j) = Rational(v);
                c(j, i) = Rational(-v);
            }
        out.push_back(std::move(c));
    }
    return out;
}

QSpace column_alternating_space(const std::vector<QMatrix>& cs) {
    const std::size_t n = cs.size();
    require(n >= 1, "column_alternating_space: need at least one matrix");
    for (std::size_t k = 0; k < n; ++k) {
        const QMatrix& c = cs[k];
        if (c.rows() != n || c.cols() != n) {
            throw Error(ErrorCode::shape_mismatch, "column_alternating_space: C" + std::to_string(k + 1) + " must be " +
                                                       std::to_string(n) + "x" + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (!(c(i, j) + c(j, i)).is_zero() || (i == j && !c(i, i).is_zero())) {
                    throw Error(ErrorCode::not_alternating, "column_alternating_space: C" + std::to_string(k + 1) +
                                                                " is not alternating at (" + std::to_string(i + 1) +
                                                                "," + std::to_string(j + 1) + ")");
                }
    }
    std::vector<QMatrix> mats;
    for (std::size_t j = 0; j < n; ++j) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < n; ++r) m(r, i) = cs[i](r, j);
        mats.push_back(std::move(m));
    }
    return QSpace(n, mats);
}

GeneratedSpace generate(const FamilyRequest& request) {
    const auto& p = request.params;
    auto want = [&](std::size_t count, const std::string& usage) {
        require(p.size() == count, request.family + ": usage: gen " + usage);
    };
    GeneratedSpace g;
    g.metadata["family"] = request.family;
    std::string joined;
    for (const auto& s : p) joined += (joined.empty() ? "" : " ") + s;
    g.metadata["params"] = joined;
    if (request.family == "lambda") {
        want(1, "lambda <n>");
        const auto n = parse_count(p[0], "n");
        g.space = lambda_space(n);
        g.metadata["name"] = "Lambda(" + p[0] + ")";
    } else if (request.family == "sl-standard") {
        want(1, "sl-standard <n>");
        g.space = sl_standard(parse_count(p[0], "n"));
        g.metadata["name"] = "sl(" + p[0] + ") standard";
    } else if (request.family == "sl-monomial") {
        want(2, "sl-monomial <n> <d>");
        g.space = sl_monomial_rep(parse_count(p[0], "n"), parse_count(p[1], "d"));
        g.metadata["name"] = "sl(" + p[0] + ") on degree " + p[1] + "*" + p[0] + " monomials";
    } else if (request.family == "adjoint") {
        want(1, "adjoint sl2|sl3|so3");
        g.space = adjoint_of(p[0]);
        g.metadata["name"] = "ad " + p[0];
    } else if (request.family == "heisenberg") {
        want(1, "heisenberg <n>");
        g.space = heisenberg(parse_count(p[0], "n"));
        g.metadata["name"] = "Heisenberg in M(" + p[0] + ")";
    } else if (request.family == "strict-upper") {
        want(0, "strict-upper");
        g.space = strict_upper_line();
        g.metadata["name"] = "span{E12} in M(2)";
    } else if (request.family == "borel-sl2") {
        want(0, "borel-sl2");
        g.space = borel_sl2();
        g.metadata["name"] = "span{h, e} in sl(2)";
    } else if (request.family == "column-alternating") {
        want(2, "column-alternating <n> <seed>");
        const auto n = parse_count(p[0], "n");
        const auto seed = parse_count(p[1], "seed");
        g.space = column_alternating_space(random_alternating_family(n, seed));
        g.metadata["name"] = "[C1 v, ..., Cn v] from random alternating C (n=" + p[0] + ", seed=" + p[1] + ")";
    } else {
        throw Error(ErrorCode::invalid_argument,
                    "unknown family '" + request.family +
                        "' (expected lambda, sl-standard, sl-monomial, adjoint, heisenberg, strict-upper, borel-sl2, "
                        "column-alternating)");
    }
    return g;
}

}  // namespace liesdit
