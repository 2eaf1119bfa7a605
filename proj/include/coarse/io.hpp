#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "coarse/hull.hpp"
#include "coarse/invariants.hpp"
#include "coarse/metric_space.hpp"

namespace coarse {

using Json = nlohmann::ordered_json;

// Graph text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Metric CSV: header "scale=Q", then n rows of n comma-separated integers.
FiniteMetricSpace read_metric(std::istream& in);
void write_metric(std::ostream& out, const FiniteMetricSpace& X);

// Loads either format based on the first line.
FiniteMetricSpace load_space(const std::string& path);

Json to_json(const Witness& w);
Json to_json(const Subset& s);
Json to_json(const ContractionReport& r, Scaled scale);
Json to_json(const MorseReport& r, Scaled scale);
Json to_json(const HyperbolicityReport& r, Scaled scale);
Json to_json(const HullGraph& hull);
Json to_json(const Tripod& t);

}  // namespace coarse
