#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coarse/metric_space.hpp"

namespace coarse {

// Exact nonnegative rational, used for quasi-geodesic parameters.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rat of(std::int64_t num, std::int64_t den = 1);

    bool operator==(const Rat&) const = default;
};

inline Rat operator"" _r(unsigned long long v) { return Rat::of(static_cast<std::int64_t>(v)); }

bool rat_le(const Rat& a, const Rat& b);

struct DiscretePath {
    std::vector<int> points;  // p_0 .. p_L, unit-step
    Rat lambda{1, 1};         // >= 1
    Rat eps{0, 1};            // >= 0

    int steps() const { return static_cast<int>(points.size()) - 1; }
};

struct QuasiGeodesicCheck {
    bool ok = true;
    // First violating pair (i, j), minimizing j then i.
    std::optional<std::pair<int, int>> violation;
};

// Checks the unit-step and lower quasi-geodesic invariants exactly.
QuasiGeodesicCheck is_quasi_geodesic(const FiniteMetricSpace& X, const DiscretePath& path);

struct EnumerationResult {
    std::vector<DiscretePath> paths;  // lexicographic order of vertex sequences
    bool complete = true;             // false iff the budget ran out
    std::uint64_t expansions = 0;
};

// Emits exactly the unit-step (lambda, eps)-quasi-geodesics from x to y, each
// once, in lexicographic order. DFS prunes a partial path as soon as a pair
// (i, current) violates the lower bound. Rejects x == y.
EnumerationResult enumerate_quasi_geodesics(const FiniteMetricSpace& X, int x, int y,
                                            const Rat& lambda, const Rat& eps,
                                            std::uint64_t budget);

// Geodesic vertex paths (unit-speed, every step of length exactly scale).
// Requires an integer metric. Enumeration is lexicographic.
EnumerationResult enumerate_geodesics(const FiniteMetricSpace& X, int x, int y,
                                      std::uint64_t budget);

// Number of geodesic vertex paths from x to y, counted on the geodesic DAG.
std::uint64_t count_geodesics(const FiniteMetricSpace& X, int x, int y);

// Lexicographically-first geodesic vertex path from x to y.
std::vector<int> first_geodesic(const FiniteMetricSpace& X, int x, int y);

}  // namespace coarse
