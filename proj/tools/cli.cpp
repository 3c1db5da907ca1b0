#include "cli.hpp"

#include "liesdit/cartan.hpp"
#include "liesdit/errors.hpp"
#include "liesdit/families.hpp"
#include "liesdit/kernel_cert.hpp"
#include "liesdit/sdit.hpp"
#include "liesdit/shrunk.hpp"
#include "liesdit/space_file.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace liesdit::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string input = "-";
    bool lenient = false;
    std::size_t omega_size = 0;  // 0: default trial set
    std::size_t guard = kDefaultSubspaceGuard;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    bool partial = false;
    std::string field = "gf2";
    std::size_t degree = 1;
    std::size_t max_degree = 2;
    std::string side = "right";
    std::string family;
    std::vector<std::string> params;
    std::string output;
};

// Report fields of one command and its exit code.
struct Outcome {
    json report;
    int code = kExitDecided;
};

template <typename F>
json to_json(const F& x) {
    return x.to_string();
}

template <typename F>
json to_json(const Vec<F>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

template <typename F>
json to_json(const Matrix<F>& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        a.push_back(row);
    }
    return a;
}

template <typename F>
json to_json(const Subspace<F>& s) {
    json basis = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(to_json(s.vector(i)));
    return {{"dim", s.dim()}, {"basis", basis}};
}

template <typename F>
json to_json(const MatrixSpace<F>& s) {
    json basis = json::array();
    for (const auto& b : s.basis()) basis.push_back(to_json(b));
    return {{"n", s.n()}, {"dim", s.dim()}, {"basis", basis}};
}

json cartan_json(const CartanResult& c, const QSpace& basis) {
    json trace = json::array();
    for (const auto& step : c.descent_trace)
        trace.push_back({{"element", to_json(step.element)}, {"fitting_dim", step.fitting_dim}});
    return {{"dim", c.subalgebra.dim()},
            {"subalgebra", to_json(c.subalgebra)},
            {"regular_element", to_json(c.regular_element)},
            {"verified", c.verified},
            {"descent_trace", trace},
            {"matrices", to_json(basis)}};
}

json witness_json(const QSpace& s, const RankWitness& w) {
    // Rebuild the matrix from the input basis so the report carries an independent recheck.
    const bool recheck = rank(s.element(w.coefficients)) == w.rank && s.element(w.coefficients) == w.matrix;
    return {{"cartan_point", to_json(w.point)},
            {"coefficients", to_json(w.coefficients)},
            {"matrix", to_json(w.matrix)},
            {"rank", w.rank},
            {"rechecked", recheck}};
}

CartanConfig cartan_config(const Options& o) {
    return o.omega_size == 0 ? CartanConfig{} : CartanConfig::with_omega_size(o.omega_size);
}

// Max rank over random integer combinations in [-50, 50].
std::size_t sampled_max_rank(const QSpace& s, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-50, 50);
    std::size_t best = 0;
    for (std::size_t t = 0; t < samples && best < s.n(); ++t) {
        QVec c;
        for (std::size_t i = 0; i < s.dim(); ++i) c.emplace_back(dist(rng));
        best = std::max(best, rank(s.element(c)));
    }
    return best;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

SpaceFile load(const Options& o, std::istream& in, std::vector<std::string>& warnings) {
    std::string text;
    if (o.input == "-") {
        text = read_all(in);
    } else {
        std::ifstream f(o.input, std::ios::binary);
        if (!f) throw Error(ErrorCode::invalid_argument, "cannot open '" + o.input + "'");
        text = read_all(f);
    }
    return parse_space(text, ParseOptions{o.lenient}, &warnings);
}

json input_json(const SpaceFile& f, const QSpace* s) {
    json j = {{"field", f.field_name()}, {"n", f.n}, {"basis_size", f.basis.size()}};
    if (s != nullptr) j["dim"] = s->dim();
    if (auto it = f.metadata.find("name"); it != f.metadata.end()) j["name"] = it->second;
    return j;
}

Outcome cmd_check(const QSpace& s) {
    Outcome o;
    const auto failure = closure_check(s);
    if (failure) {
        o.report["verdict"] = "not_closed";
        o.report["failure"] = {{"i", failure->i}, {"j", failure->j}};
        return o;
    }
    const LieStructure lie(s);
    o.report["verdict"] = "closed";
    o.report["semisimple"] = is_semisimple(lie);
    o.report["solvable"] = is_solvable(lie);
    o.report["nilpotent"] = is_nilpotent(lie);
    return o;
}

json certificate_json(const KernelCertificate& c) {
    json terms = json::array();
    for (std::size_t a = 0; a < c.monomials().size(); ++a) {
        if (is_zero_vec(c.vectors()[a])) continue;
        terms.push_back({{"exponents", c.monomials()[a]}, {"vector", to_json(c.vectors()[a])}});
    }
    return {{"side", side_name(c.side())},
            {"degree", c.degree()},
            {"terms", terms},
            {"variables", c.variables()},
            {"n", c.n()}};
}

Outcome cmd_sdit(const QSpace& s, const Options& opt) {
    Outcome o;
    const SingularityDecision d = decide_singularity(s, cartan_config(opt), opt.max_degree);
    o.report["route"] = route_name(d.route);
    if (d.route == SingularityRoute::none) {
        throw Error(ErrorCode::not_closed, "the space is not closed under the commutator and has no kernel "
                                           "certificate of degree <= " + std::to_string(opt.max_degree));
    }
    o.report["verdict"] = verdict_name(*d.verdict);
    if (d.certificate) {
        o.report["certificate"] = certificate_json(*d.certificate);
        o.report["verified"] = verify_certificate(s, *d.certificate);
    }
    if (d.lie) {
        const SditVerdict& v = *d.lie;
        if (v.witness) {
            o.report["witness_rank"] = v.witness->rank;
            o.report["witness"] = witness_json(s, *v.witness);
        }
        o.report["max_rank_over_hits"] = v.max_rank_over_hits;
        o.report["points_evaluated"] = v.points_evaluated;
        o.report["cartan"] = cartan_json(v.cartan, v.cartan_basis);
    }
    if (opt.samples > 0) {
        o.report["sampled_max_rank"] = sampled_max_rank(s, opt.samples, opt.seed);
        o.report["samples"] = opt.samples;
    }
    return o;
}

Outcome cmd_maxrank(const QSpace& s, const Options& opt) {
    Outcome o;
    const MaxRankReport r = semisimple_max_rank(s, cartan_config(opt));
    o.report["verdict"] = r.max_rank == s.n() ? verdict_name(Verdict::nonsingular) : verdict_name(Verdict::singular);
    o.report["max_rank"] = r.max_rank;
    o.report["witness"] = witness_json(s, r.witness);
    o.report["cartan"] = cartan_json(r.cartan, r.cartan_basis);
    if (opt.samples > 0) {
        o.report["sampled_max_rank"] = sampled_max_rank(s, opt.samples, opt.seed);
        o.report["samples"] = opt.samples;
    }
    return o;
}

Outcome cmd_cartan(const QSpace& s, const Options& opt) {
    Outcome o;
    const LieStructure lie(s);
    const CartanResult c = cartan_subalgebra(lie, cartan_config(opt));
    o.report["verdict"] = c.verified ? "verified" : "unverified";
    o.report["cartan"] = cartan_json(c, cartan_as_matrix_space(lie, c.subalgebra));
    return o;
}

Outcome cmd_weights(const QSpace& s, const Options& opt) {
    Outcome o;
    const LieStructure lie(s);
    if (!is_semisimple(lie)) {
        throw Error(ErrorCode::not_semisimple, "the weight criterion needs a semisimple algebra");
    }
    const CartanResult c = cartan_subalgebra(lie, cartan_config(opt));
    const QSpace cb = cartan_as_matrix_space(lie, c.subalgebra);
    const WeightDecomposition w = weights(cb, opt.partial);
    json list = json::array();
    for (const auto& ws : w.weights) {
        json e = {{"weight", to_json(QVec(ws.weight))},
                  {"rational", ws.rational},
                  {"multiplicity", ws.multiplicity},
                  {"space", to_json(ws.space)}};
        if (!ws.rational) {
            e["irrational_at"] = ws.irrational_at;
            e["residual_factor"] = ws.residual_factor;
        }
        list.push_back(e);
    }
    o.report["verdict"] = verdict_name(singular_via_weights(w));
    o.report["complete"] = w.complete();
    o.report["weights"] = list;
    o.report["cartan"] = cartan_json(c, cb);
    return o;
}

json series_json(const CompositionSeries& cs) {
    json chain = json::array();
    for (const auto& v : cs.chain) chain.push_back(v.dim());
    json factors = json::array();
    for (const auto& f : cs.factors) {
        json e = {{"dim", f.dim}, {"trivial", f.trivial}, {"envelope_dim", f.envelope_dim}, {"block", to_json(f.block)}};
        e["absolutely_irreducible"] = f.absolutely_irreducible ? json(*f.absolutely_irreducible) : json(nullptr);
        factors.push_back(e);
    }
    return {{"chain_dims", chain}, {"factors", factors}, {"complete", cs.complete()}};
}

Outcome cmd_shrunk(const QSpace& s) {
    Outcome o;
    const ShrunkVerdict v = has_shrunk_subspace(s);
    o.report["verdict"] = shrunk_answer_name(v.answer);
    if (v.trivial_factor) o.report["trivial_factor"] = *v.trivial_factor;
    if (v.witness) {
        o.report["witness"] = {{"subspace", to_json(v.witness->subspace)},
                               {"image", to_json(v.witness->image)},
                               {"deficit", v.witness->deficit}};
    }
    o.report["series"] = series_json(v.series);
    if (v.answer == ShrunkAnswer::undetermined) o.code = kExitUndetermined;
    return o;
}

template <std::uint32_t P>
Outcome ncrk_for(const SpaceFile& f, const Options& opt, std::vector<std::string>& warnings) {
    Outcome o;
    const auto s = to_prime_field_space<P>(f, &warnings);
    const auto r = ncrk_bruteforce<P>(s, opt.guard);
    o.report["verdict"] = r.max_deficit > 0 ? "yes" : "no";
    o.report["field"] = r.field;
    o.report["ncrk"] = r.ncrk;
    o.report["max_deficit"] = r.max_deficit;
    o.report["canonical_lower"] = to_json(r.canonical_lower);
    o.report["canonical_upper"] = to_json(r.canonical_upper);
    o.report["lower_attains_max"] = r.lower_attains_max;
    o.report["upper_attains_max"] = r.upper_attains_max;
    o.report["all_max_deficit_count"] = r.all_max_deficit_count;
    o.report["subspaces_examined"] = r.subspaces_examined;
    return o;
}

Outcome cmd_compseries(const QSpace& s) {
    Outcome o;
    const CompositionSeries cs = composition_series(s);
    o.report["verdict"] = cs.complete() ? "complete" : "incomplete";
    o.report["series"] = series_json(cs);
    if (!cs.complete()) o.code = kExitUndetermined;
    return o;
}

Side parse_side(const std::string& s) {
    if (s == "l" || s == "left") return Side::left;
    if (s == "r" || s == "right") return Side::right;
    throw Error(ErrorCode::invalid_argument, "--side must be l, r, left or right");
}

Outcome cmd_linker(const QSpace& s, const Options& opt) {
    Outcome o;
    const Side side = parse_side(opt.side);
    const CertificateSearch r = search_kernel_certificate(s, opt.degree, side);
    o.report["side"] = side_name(side);
    o.report["degree"] = opt.degree;
    o.report["unknowns"] = r.unknowns;
    o.report["equations"] = r.equations;
    o.report["solution_dim"] = r.solution_dim;
    if (!r.certificate) {
        o.report["verdict"] = "none";
        return o;
    }
    const KernelCertificate& c = *r.certificate;
    o.report["verdict"] = "certificate";
    o.report["certificate"] = certificate_json(c);
    o.report["verified"] = verify_certificate(s, c);
    if (c.degree() == 1) {
        o.report["cross_identity"] = linker_cross_identity_check(s, c);
        o.report["bracket_identity"] =
            closure_check(s) ? json(nullptr) : json(bracket_compatibility_check(s, c));
    }
    return o;
}

int emit(std::ostream& out, json report, const std::vector<std::string>& warnings,
         std::chrono::steady_clock::time_point start, int code) {
    report["warnings"] = warnings;
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << report.dump(2) << '\n';
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact analysis of matrix spaces and matrix Lie algebras", "liesdit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--lenient", opt.lenient, "Normalize non-canonical entries instead of rejecting them");
    app.add_option("--omega-size", opt.omega_size, "Size of the trial set {0..k-1} for the Cartan descent");
    app.add_option("--guard-subspaces", opt.guard, "Maximum number of subspaces a brute-force search may visit");
    app.add_option("--seed", opt.seed, "Seed for random sampling");

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("file", opt.input, "Space file (default: stdin)");
        return sub;
    };
    auto* check = with_input(app.add_subcommand("check", "Closure under the commutator and structure flags"));
    auto* sdit = with_input(app.add_subcommand("sdit", "Decide whether every matrix in a Lie algebra is singular"));
    sdit->add_option("--samples", opt.samples, "Also report the max rank over this many random combinations");
    sdit->add_option("--max-degree", opt.max_degree, "Highest certificate degree tried on spaces that are not closed");
    auto* maxrank = with_input(app.add_subcommand("maxrank", "Maximum rank of a semisimple matrix Lie algebra"));
    maxrank->add_option("--samples", opt.samples, "Also report the max rank over this many random combinations");
    auto* cartan = with_input(app.add_subcommand("cartan", "Cartan subalgebra by regular-element descent"));
    auto* wts = with_input(app.add_subcommand("weights", "Weights of a Cartan subalgebra (semisimple input)"));
    wts->add_flag("--partial", opt.partial, "Keep parts with irrational spectrum instead of failing");
    auto* shrunk = with_input(app.add_subcommand("shrunk", "Decide whether a shrunk subspace exists"));
    auto* ncrk = with_input(app.add_subcommand("ncrk-bf", "Non-commutative rank by exhaustive search over GF(p)"));
    ncrk->add_option("--field", opt.field, "gf2 or gf3")->check(CLI::IsMember({"gf2", "gf3"}));
    auto* comp = with_input(app.add_subcommand("compseries", "Composition series over Q"));
    auto* linker = with_input(app.add_subcommand("linker", "Search for a polynomial kernel-vector certificate"));
    linker->add_option("--degree", opt.degree, "Degree of the certificate")->required();
    linker->add_option("--side", opt.side, "l, r, left or right")->required();
    auto* gen = app.add_subcommand("gen", "Write a built-in example space");
    gen->add_option("family", opt.family, "Example family")->required();
    gen->add_option("params", opt.params, "Family parameters");
    gen->add_option("-o,--output", opt.output, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitDecided : kExitInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> warnings;
    CLI::App* sub = app.get_subcommands().front();
    json report = {{"command", sub->get_name()}};
    try {
        if (sub == gen) {
            GeneratedSpace g = generate(FamilyRequest{opt.family, opt.params});
            const std::string text = write_space(space_file_from(g.space, g.metadata));
            if (opt.output.empty()) {
                out << text;
                return kExitDecided;
            }
            std::ofstream f(opt.output, std::ios::binary);
            if (!f || !(f << text)) throw Error(ErrorCode::invalid_argument, "cannot write '" + opt.output + "'");
            report["verdict"] = "generated";
            report["output"] = opt.output;
            report["input"] = {{"n", g.space.n()}, {"dim", g.space.dim()}, {"name", g.metadata["name"]}};
            return emit(out, report, warnings, start, kExitDecided);
        }

        const SpaceFile file = load(opt, in, warnings);
        Outcome o;
        if (sub == ncrk) {
            report["input"] = input_json(file, nullptr);
            o = opt.field == "gf2" ? ncrk_for<2>(file, opt, warnings) : ncrk_for<3>(file, opt, warnings);
        } else {
            const QSpace s = to_rational_space(file, &warnings);
            report["input"] = input_json(file, &s);
            if (sub == check) o = cmd_check(s);
            else if (sub == sdit) o = cmd_sdit(s, opt);
            else if (sub == maxrank) o = cmd_maxrank(s, opt);
            else if (sub == cartan) o = cmd_cartan(s, opt);
            else if (sub == wts) o = cmd_weights(s, opt);
            else if (sub == shrunk) o = cmd_shrunk(s);
            else if (sub == comp) o = cmd_compseries(s);
            else if (sub == linker) o = cmd_linker(s, opt);
        }
        report.update(o.report);
        return emit(out, report, warnings, start, o.code);
    } catch (const Error& e) {
        report["verdict"] = "error";
        report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return emit(out, report, warnings, start, kExitInputError);
    } catch (const std::exception& e) {
        report["verdict"] = "error";
        report["error"] = {{"code", "internal_error"}, {"message", e.what()}};
        err << "error: " << e.what() << '\n';
        return emit(out, report, warnings, start, kExitInputError);
    }
}

}  // namespace liesdit::cli
