#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coarse/metric_space.hpp"

namespace coarse {

// A function f : X -> scaled integers with f(x) + f(y) >= d(x,y).
struct MetricForm {
    std::vector<Scaled> values;

    bool operator==(const MetricForm&) const = default;
    bool operator<(const MetricForm& other) const { return values < other.values; }
};

struct DeltaCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;  // lexicographically first violating pair
};

DeltaCheck is_in_delta(const FiniteMetricSpace& X, const MetricForm& f);

bool is_one_lipschitz(const FiniteMetricSpace& X, const MetricForm& f);

struct ExtremalCheck {
    bool ok = true;
    std::optional<int> witness;  // first x where max_y (d(x,y) - f(y)) < f(x)
};

// Requires f in Delta (throws kind NotMetricForm otherwise). True iff
// f(x) = max_y (d(x,y) - f(y)) for every x.
ExtremalCheck is_extremal(const FiniteMetricSpace& X, const MetricForm& f);

// Kuratowski embedding e(x) = d(x, -).
MetricForm kuratowski(const FiniteMetricSpace& X, int x);

// Sup metric, exact.
Scaled dinf(const MetricForm& f, const MetricForm& g);

// All integer-valued extremal forms (multiples of scale), in lexicographic
// order. Requires an integer metric. Throws kinds NonIntegerMetric and
// BudgetExceeded. The budget bounds both the a-priori search-space estimate
// prod_x (ecc(x)+1) and the number of backtracking nodes.
std::vector<MetricForm> enumerate_hull_vertices(const FiniteMetricSpace& X,
                                                std::uint64_t budget = 1'000'000'000ULL);

struct HullGraph {
    std::vector<MetricForm> forms;  // lexicographic order
    Graph graph;                    // edges exactly at dinf == scale
    std::vector<int> embedding;     // x -> index of e(x) in forms
    FiniteMetricSpace metric;       // shortest-path metric of graph, rescaled
};

// Builds the integer-hull graph and verifies: every form extremal, graph
// metric == dinf everywhere (kind MetricMismatch), the embedding is
// isometric, and the result is Helly (kind NotHelly).
HullGraph hull_graph(const FiniteMetricSpace& X, std::uint64_t budget = 1'000'000'000ULL);

struct HellyResult {
    bool helly = true;
    std::vector<Ball> witness_family;  // pairwise-intersecting, empty total intersection
};

// Decides the Helly property of the family of all combinatorial balls via the
// triple criterion: for every three vertices, the balls containing at least
// two of them must share a vertex.
HellyResult is_helly(const Graph& g);

struct Tripod {
    int center = -1;
    std::array<std::vector<int>, 3> legs;  // geodesic vertex paths x_i -> center
    int slack = 0;                         // 0 or 1, unscaled
};

// Gromov-product tripod in a Helly graph. Even perimeter gives slack 0; odd
// perimeter uses ceiling radii and slack 1. Throws kind NotHelly when the
// ball intersection is empty despite pairwise intersection.
Tripod tripod(const FiniteMetricSpace& X, int x1, int x2, int x3);

}  // namespace coarse
