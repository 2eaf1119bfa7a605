#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coarse/hull.hpp"
#include "coarse/invariants.hpp"
#include "coarse/io.hpp"
#include "coarse/metric_space.hpp"
#include "coarse/paths.hpp"

namespace coarse {

struct VerifyConfig {
    Scaled slack = 1;  // unscaled; multiplied by each instance's scale
    std::uint64_t enum_budget = 500'000;        // geodesic enumerations inside suites
    std::uint64_t morse_budget = 4'000'000;     // per morse_constant call
    std::uint64_t hull_budget = 1'000'000'000'000'000ULL;
    std::uint64_t seed = 7;
    int max_hull_base = 12;  // hulls are built for base graphs up to this size
    Scaled tol = 2;          // additive discretization tolerance, unscaled
    std::vector<std::pair<Rat, Rat>> lambda_eps = {{Rat{1, 1}, Rat{0, 1}},
                                                   {Rat{9, 1}, Rat{0, 1}}};
};

struct DesignatedSubset {
    std::string label;
    Subset set;
    bool contracting = false;  // family-level expectation, gates persistence
};

struct DesignatedPath {
    std::string label;
    std::vector<int> points;
};

struct CorpusInstance {
    std::string id;
    std::string family;
    int family_param = 0;
    Graph graph;
    FiniteMetricSpace space;
    std::vector<DesignatedSubset> subsets;
    std::vector<DesignatedPath> paths;
    bool helly = false;
    bool tree = false;
    bool is_hull = false;
    std::shared_ptr<HullGraph> hull;  // set for base instances within max_hull_base
};

using Corpus = std::vector<CorpusInstance>;

Corpus build_default_corpus(const VerifyConfig& config);

enum class SuiteStatus { Pass, Fail, Vacuous };

struct SuiteResult {
    std::string suite;
    std::string instance;
    std::map<std::string, Scaled> measured;
    Scaled slack = 0;  // worst-case inequality slack; >= 0 means satisfied
    std::vector<Witness> witnesses;
    SuiteStatus status = SuiteStatus::Pass;
    std::string note;
};

std::vector<SuiteResult> suite_projection_geodesic(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_concatenation(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_one_geodesic(const Corpus&, const VerifyConfig&,
                                            bool helly_only = true);
std::vector<SuiteResult> suite_all_geodesics(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_morse_iff_contracting(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_bounded_jumps(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_local_to_global(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_hull_quasiconvexity(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_hull_reverse_triangle(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_hull_geodesics_near_projection(const Corpus&,
                                                              const VerifyConfig&);
std::vector<SuiteResult> suite_persistence(const Corpus&, const VerifyConfig&);
std::vector<SuiteResult> suite_density(const Corpus&, const VerifyConfig&);

struct Report {
    std::vector<SuiteResult> results;
    bool pass = true;
};

// Runs all suites (or the named subset) and aggregates. pass == no hard
// assertion failed.
Report run_all(const Corpus&, const VerifyConfig&,
               const std::vector<std::string>& suites = {});

std::vector<std::string> suite_names();

Json to_json(const SuiteResult& r);
Json to_json(const Report& r);

}  // namespace coarse
