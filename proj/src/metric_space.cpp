#include "coarse/metric_space.hpp"

#include <algorithm>
#include <queue>

namespace coarse {

bool Subset::contains(int p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

Subset Subset::of(std::vector<int> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return Subset{std::move(points)};
}

FiniteMetricSpace FiniteMetricSpace::validate(const std::vector<std::vector<Scaled>>& matrix,
                                              Scaled scale) {
    const int n = static_cast<int>(matrix.size());
    if (scale <= 0) {
        throw MetricError("scale must be positive", Witness{"BadScale", {}, {scale}});
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[i].size()) != n) {
            throw MetricError("matrix is not square", Witness{"NotSquare", {i}, {}});
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (matrix[x][y] < 0) {
                throw MetricError("negative entry",
                                  Witness{"NegativeEntry", {x, y}, {matrix[x][y]}});
            }
            if (matrix[x][y] != matrix[y][x]) {
                throw MetricError("asymmetric entry",
                                  Witness{"AsymmetricEntry", {x, y}, {matrix[x][y], matrix[y][x]}});
            }
        }
        if (matrix[x][x] != 0) {
            throw MetricError("nonzero diagonal",
                              Witness{"NegativeEntry", {x, x}, {matrix[x][x]}});
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x != y && matrix[x][y] == 0) {
                throw MetricError("zero off-diagonal",
                                  Witness{"ZeroOffDiagonal", {x, y}, {}});
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (matrix[x][z] > matrix[x][y] + matrix[y][z]) {
                    throw MetricError(
                        "triangle inequality violated",
                        Witness{"TriangleViolation",
                                {x, y, z},
                                {matrix[x][z], matrix[x][y], matrix[y][z]}});
                }
            }
        }
    }
    FiniteMetricSpace space;
    space.n_ = n;
    space.scale_ = scale;
    space.dist_.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            space.dist_[static_cast<std::size_t>(x) * n + y] = matrix[x][y];
        }
    }
    return space;
}

Scaled FiniteMetricSpace::d(int x, const Subset& y) const {
    Scaled best = -1;
    for (int p : y.members) {
        Scaled v = d(x, p);
        if (best < 0 || v < best) best = v;
    }
    if (best < 0) {
        throw MetricError("distance to empty subset", Witness{"EmptySubset", {x}, {}});
    }
    return best;
}

Scaled FiniteMetricSpace::eccentricity(int x) const {
    Scaled m = 0;
    for (int y = 0; y < n_; ++y) m = std::max(m, d(x, y));
    return m;
}

Scaled FiniteMetricSpace::diameter() const {
    Scaled m = 0;
    for (int x = 0; x < n_; ++x) m = std::max(m, eccentricity(x));
    return m;
}

Subset FiniteMetricSpace::ball_members(const Ball& b) const {
    std::vector<int> members;
    for (int y = 0; y < n_; ++y) {
        if (d(b.center, y) <= b.radius) members.push_back(y);
    }
    return Subset{std::move(members)};
}

bool FiniteMetricSpace::is_integer_metric() const {
    for (Scaled v : dist_) {
        if (v % scale_ != 0) return false;
    }
    return true;
}

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw MetricError("loop edge", Witness{"LoopEdge", {u}, {}});
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw MetricError("edge out of range", Witness{"BadEdge", {u, v}, {}});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{n, std::move(edges)};
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool Graph::is_connected() const {
    if (n == 0) return false;
    auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

FiniteMetricSpace graph_metric(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<std::vector<Scaled>> dist(g.n, std::vector<Scaled>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        dist[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
            }
        }
    }
    for (int x = 0; x < g.n; ++x) {
        for (int y = 0; y < g.n; ++y) {
            if (dist[x][y] < 0) {
                // Component witness: vertices reachable from x.
                std::vector<std::int64_t> component;
                for (int z = 0; z < g.n; ++z) {
                    if (dist[x][z] >= 0) component.push_back(z);
                }
                throw MetricError("graph is disconnected",
                                  Witness{"Disconnected", component, {}});
            }
        }
    }
    return FiniteMetricSpace::validate(dist, 1);
}

}  // namespace coarse
