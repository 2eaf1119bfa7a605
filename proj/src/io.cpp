#include "coarse/io.hpp"

#include <fstream>
#include <sstream>

namespace coarse {

Graph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) {
        throw MetricError("bad graph header", Witness{"ParseError", {}, {}});
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) {
            throw MetricError("truncated edge list", Witness{"ParseError", {i}, {}});
        }
        edges.emplace_back(u, v);
    }
    return Graph::make(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

FiniteMetricSpace read_metric(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("scale=", 0) != 0) {
        throw MetricError("bad metric header, expected scale=Q", Witness{"ParseError", {}, {}});
    }
    Scaled scale = std::stoll(header.substr(6));
    std::vector<std::vector<Scaled>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Scaled> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stoll(cell));
        rows.push_back(std::move(row));
    }
    return FiniteMetricSpace::validate(rows, scale);
}

void write_metric(std::ostream& out, const FiniteMetricSpace& X) {
    out << "scale=" << X.scale() << '\n';
    for (int x = 0; x < X.n(); ++x) {
        for (int y = 0; y < X.n(); ++y) {
            if (y) out << ',';
            out << X.d(x, y);
        }
        out << '\n';
    }
}

FiniteMetricSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MetricError("cannot open input file", Witness{"IOError", {}, {}});
    }
    std::string first;
    std::getline(in, first);
    in.seekg(0);
    if (first.rfind("scale=", 0) == 0) {
        return read_metric(in);
    }
    return graph_metric(read_graph(in));
}

Json to_json(const Witness& w) {
    return Json{{"kind", w.kind}, {"indices", w.indices}, {"values", w.values}};
}

Json to_json(const Subset& s) { return Json(s.members); }

Json to_json(const ContractionReport& r, Scaled scale) {
    Json j;
    j["invariant"] = "contraction_constant";
    j["value"] = r.constant;
    j["scale"] = scale;
    j["vacuous"] = r.vacuous;
    j["witnesses"] = Json::array();
    if (!r.vacuous) {
        j["witnesses"].push_back(to_json(Witness{
            "ContractionWitness",
            {r.witness_ball.center, r.witness_pair.first, r.witness_pair.second},
            {r.witness_ball.radius, r.constant}}));
    }
    return j;
}

Json to_json(const MorseReport& r, Scaled scale) {
    Json j;
    j["invariant"] = "morse_constant";
    j["lambda"] = {r.lambda.num, r.lambda.den};
    j["eps"] = {r.eps.num, r.eps.den};
    j["value"] = r.constant;
    j["scale"] = scale;
    j["exact"] = r.exact;
    j["vacuous"] = r.vacuous;
    j["witnesses"] = Json::array();
    if (r.witness_point >= 0) {
        Witness w{"MorseWitness", {}, {r.constant}};
        w.indices.push_back(r.witness_point);
        for (int p : r.witness_path.points) w.indices.push_back(p);
        j["witnesses"].push_back(to_json(w));
    }
    return j;
}

Json to_json(const HyperbolicityReport& r, Scaled scale) {
    Json j;
    j["invariant"] = "gromov_delta";
    j["value"] = r.delta;
    j["scale"] = scale;
    j["vacuous"] = false;
    j["witnesses"] = Json::array({to_json(Witness{
        "DeltaWitness",
        {r.witness_quadruple[0], r.witness_quadruple[1], r.witness_quadruple[2],
         r.witness_quadruple[3]},
        {r.delta}})});
    return j;
}

Json to_json(const HullGraph& hull) {
    Json forms = Json::array();
    for (const auto& f : hull.forms) forms.push_back(f.values);
    Json edges = Json::array();
    for (auto [u, v] : hull.graph.edges) edges.push_back({u, v});
    return Json{{"forms", forms}, {"edges", edges}, {"embedding", hull.embedding}};
}

Json to_json(const Tripod& t) {
    return Json{{"center", t.center},
                {"legs", {t.legs[0], t.legs[1], t.legs[2]}},
                {"slack", t.slack}};
}

}  // namespace coarse
