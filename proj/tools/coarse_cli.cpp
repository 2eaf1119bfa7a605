#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "coarse/generators.hpp"
#include "coarse/io.hpp"
#include "coarse/verify.hpp"

namespace {

using coarse::Json;
using coarse::Scaled;

// "3,0,7" -> explicit members; "geodesic:a..b" -> lexicographically first
// geodesic between a and b.
coarse::Subset parse_subset(const coarse::FiniteMetricSpace& X, const std::string& spec) {
    if (spec.rfind("geodesic:", 0) == 0) {
        auto range = spec.substr(9);
        auto dots = range.find("..");
        if (dots == std::string::npos) {
            throw coarse::MetricError("expected geodesic:a..b", coarse::Witness{"BadSubsetSpec", {}, {}});
        }
        int a = std::stoi(range.substr(0, dots));
        int b = std::stoi(range.substr(dots + 2));
        return coarse::Subset::of(coarse::first_geodesic(X, a, b));
    }
    std::vector<int> members;
    std::stringstream ss(spec);
    std::string cell;
    while (std::getline(ss, cell, ',')) members.push_back(std::stoi(cell));
    auto sub = coarse::Subset::of(std::move(members));
    for (int p : sub.members) {
        if (p < 0 || p >= X.n()) {
            throw coarse::MetricError("subset member out of range",
                                      coarse::Witness{"BadSubsetSpec", {p}, {}});
        }
    }
    return sub;
}

coarse::Rat parse_rat(const std::string& spec) {
    auto slash = spec.find('/');
    if (slash == std::string::npos) return coarse::Rat::of(std::stoll(spec));
    return coarse::Rat::of(std::stoll(spec.substr(0, slash)), std::stoll(spec.substr(slash + 1)));
}

// "9,0;1,0" -> {(9,0), (1,0)}; each component may be a fraction like 3/2.
std::vector<std::pair<coarse::Rat, coarse::Rat>> parse_lambda_eps(const std::string& spec) {
    std::vector<std::pair<coarse::Rat, coarse::Rat>> out;
    std::stringstream ss(spec);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos) {
            throw coarse::MetricError("expected lambda,eps pairs",
                                      coarse::Witness{"BadParams", {}, {}});
        }
        out.emplace_back(parse_rat(pair.substr(0, comma)), parse_rat(pair.substr(comma + 1)));
    }
    if (out.empty()) {
        throw coarse::MetricError("empty lambda-eps list", coarse::Witness{"BadParams", {}, {}});
    }
    return out;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw coarse::MetricError("cannot open output file", coarse::Witness{"IOError", {}, {}});
        }
        out << j.dump(2) << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact coarse-geometry invariants on finite metric spaces"};
    app.require_subcommand(1);

    std::string input, out_path, subset_spec, family;
    std::string lambda_eps_spec = "1,0";
    std::string format = "json";
    Scaled slack = 1;
    std::uint64_t budget = 1'000'000;
    std::uint64_t hull_budget = 1'000'000'000ULL;
    std::uint64_t seed = 7;
    int n = 5, rows = 2, cols = 5, arms = 3, seg = 2, spine = 5, legs = 2;
    std::vector<int> tripod_pts;
    std::vector<std::string> suites;

    auto* generate = app.add_subcommand("generate", "emit a graph from a named family");
    generate->add_option("--family", family,
                         "path|cycle|grid|king|tree|star|caterpillar")->required();
    generate->add_option("--n", n, "vertex count (path, cycle, tree)");
    generate->add_option("--rows", rows, "grid/king rows");
    generate->add_option("--cols", cols, "grid/king cols");
    generate->add_option("--arms", arms, "star arms");
    generate->add_option("--seg", seg, "star arm subdivision");
    generate->add_option("--spine", spine, "caterpillar spine length");
    generate->add_option("--legs", legs, "caterpillar leg count");
    generate->add_option("--seed", seed, "random tree seed");
    generate->add_option("--out", out_path, "output file (default stdout)");

    auto* invariants = app.add_subcommand("invariants", "contraction, morse, and delta reports");
    invariants->add_option("--input", input, "graph or metric file")->required();
    invariants->add_option("--subset", subset_spec, "Y as 'a,b,c' or 'geodesic:a..b'")->required();
    invariants->add_option("--lambda-eps", lambda_eps_spec,
                           "quasi-geodesic parameter pairs, e.g. '9,0;1,0' or '3/2,1'");
    invariants->add_option("--slack", slack, "projection slack in unscaled units");
    invariants->add_option("--budget", budget, "enumeration budget");
    invariants->add_option("--format", format, "json|text");
    invariants->add_option("--out", out_path, "output file (default stdout)");

    auto* hull = app.add_subcommand("hull", "integer injective hull of an integer metric");
    hull->add_option("--input", input, "graph or metric file")->required();
    hull->add_option("--budget", hull_budget, "hull enumeration budget");
    hull->add_option("--tripod", tripod_pts, "three vertices for a tripod report")
        ->expected(3);
    hull->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run lemma suites over the default corpus");
    verify->add_option("--suite", suites, "suite names (default: all)");
    verify->add_option("--slack", slack, "projection slack in unscaled units");
    verify->add_option("--budget", budget, "geodesic enumeration budget");
    verify->add_option("--seed", seed, "corpus random-tree seed");
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (generate->parsed()) {
        coarse::Graph g;
        if (family == "path") g = coarse::gen::path(n);
        else if (family == "cycle") g = coarse::gen::cycle(n);
        else if (family == "grid") g = coarse::gen::grid(rows, cols);
        else if (family == "king") g = coarse::gen::king(rows, cols);
        else if (family == "tree") g = coarse::gen::random_tree(n, seed);
        else if (family == "star") g = coarse::gen::star_subdiv(arms, seg);
        else if (family == "caterpillar") g = coarse::gen::caterpillar(spine, legs);
        else {
            throw coarse::MetricError("unknown family " + family,
                                      coarse::Witness{"BadParams", {}, {}});
        }
        if (out_path.empty()) {
            coarse::write_graph(std::cout, g);
        } else {
            std::ofstream out(out_path);
            coarse::write_graph(out, g);
        }
        return 0;
    }

    if (invariants->parsed()) {
        auto X = coarse::load_space(input);
        auto Y = parse_subset(X, subset_spec);
        const Scaled s = slack * X.scale();
        Json j;
        j["n"] = X.n();
        j["scale"] = X.scale();
        j["subset"] = to_json(Y);
        j["contraction"] = to_json(coarse::contraction_constant(X, Y, s), X.scale());
        j["morse"] = Json::array();
        for (const auto& [lambda, eps] : parse_lambda_eps(lambda_eps_spec)) {
            j["morse"].push_back(
                to_json(coarse::morse_constant(X, Y, lambda, eps, budget), X.scale()));
        }
        if (X.n() >= 4) j["delta"] = to_json(coarse::gromov_delta(X), X.scale());
        if (format == "text") {
            std::ostringstream text;
            text << "n=" << X.n() << " scale=" << X.scale() << '\n';
            text << "contraction D=" << j["contraction"]["value"].get<Scaled>()
                 << (j["contraction"]["vacuous"].get<bool>() ? " (vacuous)" : "") << '\n';
            for (const auto& m : j["morse"]) {
                text << "morse(" << m["lambda"][0].get<Scaled>() << '/'
                     << m["lambda"][1].get<Scaled>() << ',' << m["eps"][0].get<Scaled>() << '/'
                     << m["eps"][1].get<Scaled>() << ")=" << m["value"].get<Scaled>()
                     << (m["exact"].get<bool>() ? "" : " (lower bound)") << '\n';
            }
            if (j.contains("delta")) text << "delta=" << j["delta"]["value"].get<Scaled>() << '\n';
            if (out_path.empty()) {
                std::cout << text.str();
            } else {
                std::ofstream out(out_path);
                out << text.str();
            }
            return 0;
        }
        emit(j, out_path);
        return 0;
    }

    if (hull->parsed()) {
        auto X = coarse::load_space(input);
        Json j = to_json(coarse::hull_graph(X, hull_budget));
        if (!tripod_pts.empty()) {
            j["tripod"] = to_json(coarse::tripod(X, tripod_pts[0], tripod_pts[1], tripod_pts[2]));
        }
        emit(j, out_path);
        return 0;
    }

    coarse::VerifyConfig cfg;
    cfg.slack = slack;
    cfg.seed = seed;
    if (verify->count("--budget")) cfg.enum_budget = budget;
    auto corpus = coarse::build_default_corpus(cfg);
    auto report = coarse::run_all(corpus, cfg, suites);
    emit(to_json(report), out_path);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const coarse::MetricError& e) {
        Json j;
        j["error"] = e.what();
        j["witness"] = coarse::to_json(e.witness);
        std::cerr << j.dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
