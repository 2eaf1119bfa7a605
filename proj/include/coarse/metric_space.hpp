#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coarse {

// Distances are stored as integers scaled by a global denominator Q, so all
// comparisons are exact.
using Scaled = std::int64_t;

// Serializable witness attached to every structured failure.
struct Witness {
    std::string kind;
    std::vector<std::int64_t> indices;
    std::vector<Scaled> values;
};

class MetricError : public std::runtime_error {
public:
    MetricError(std::string message, Witness witness)
        : std::runtime_error(std::move(message)), witness(std::move(witness)) {}
    Witness witness;
};

struct Subset {
    std::vector<int> members;  // strictly increasing

    bool contains(int p) const;
    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }

    static Subset of(std::vector<int> points);  // sorts and dedupes
};

struct Ball {
    int center = 0;
    Scaled radius = 0;
};

class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;

    // Validates all metric axioms exactly; throws MetricError with kinds
    // AsymmetricEntry, NegativeEntry, TriangleViolation, ZeroOffDiagonal.
    static FiniteMetricSpace validate(const std::vector<std::vector<Scaled>>& matrix,
                                      Scaled scale = 1);

    int n() const { return n_; }
    Scaled scale() const { return scale_; }

    Scaled d(int x, int y) const { return dist_[static_cast<std::size_t>(x) * n_ + y]; }
    Scaled d(int x, const Subset& y) const;

    Scaled eccentricity(int x) const;
    Scaled diameter() const;

    // All y with d(center, y) <= radius (closed ball).
    Subset ball_members(const Ball& b) const;

    // True when scale divides every entry (the metric is integer-valued in
    // unscaled units).
    bool is_integer_metric() const;

private:
    int n_ = 0;
    Scaled scale_ = 1;
    std::vector<Scaled> dist_;
};

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

    std::vector<std::vector<int>> adjacency() const;
    bool is_connected() const;

    static Graph make(int n, std::vector<std::pair<int, int>> edges);
};

// All-pairs shortest-path metric of a connected graph, scale = 1.
// Throws MetricError(kind="Disconnected") with a component witness.
FiniteMetricSpace graph_metric(const Graph& g);

}  // namespace coarse
