#include "coarse/hull.hpp"

#include <algorithm>
#include <map>

#include "coarse/paths.hpp"

namespace coarse {

DeltaCheck is_in_delta(const FiniteMetricSpace& X, const MetricForm& f) {
    for (int x = 0; x < X.n(); ++x) {
        for (int y = x; y < X.n(); ++y) {
            if (f.values[x] + f.values[y] < X.d(x, y)) {
                return {false, std::make_pair(x, y)};
            }
        }
    }
    return {};
}

bool is_one_lipschitz(const FiniteMetricSpace& X, const MetricForm& f) {
    for (int x = 0; x < X.n(); ++x) {
        for (int y = x + 1; y < X.n(); ++y) {
            Scaled diff = f.values[x] - f.values[y];
            if (diff < 0) diff = -diff;
            if (diff > X.d(x, y)) return false;
        }
    }
    return true;
}

ExtremalCheck is_extremal(const FiniteMetricSpace& X, const MetricForm& f) {
    auto delta = is_in_delta(X, f);
    if (!delta.ok) {
        throw MetricError("form is not a metric form",
                          Witness{"NotMetricForm",
                                  {delta.witness->first, delta.witness->second},
                                  {f.values[delta.witness->first], f.values[delta.witness->second]}});
    }
    for (int x = 0; x < X.n(); ++x) {
        Scaled best = X.d(x, 0) - f.values[0];
        for (int y = 1; y < X.n(); ++y) best = std::max(best, X.d(x, y) - f.values[y]);
        if (best != f.values[x]) {
            return {false, x};
        }
    }
    return {};
}

MetricForm kuratowski(const FiniteMetricSpace& X, int x) {
    MetricForm f;
    f.values.resize(X.n());
    for (int y = 0; y < X.n(); ++y) f.values[y] = X.d(x, y);
    return f;
}

Scaled dinf(const MetricForm& f, const MetricForm& g) {
    Scaled m = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        Scaled diff = f.values[i] - g.values[i];
        if (diff < 0) diff = -diff;
        m = std::max(m, diff);
    }
    return m;
}

std::vector<MetricForm> enumerate_hull_vertices(const FiniteMetricSpace& X,
                                                std::uint64_t budget) {
    if (!X.is_integer_metric()) {
        throw MetricError("hull enumeration needs an integer metric",
                          Witness{"NonIntegerMetric", {}, {X.scale()}});
    }
    const int n = X.n();
    const Scaled Q = X.scale();
    std::vector<Scaled> ecc(n);
    long double estimate = 1.0L;
    for (int x = 0; x < n; ++x) {
        ecc[x] = X.eccentricity(x) / Q;
        estimate *= static_cast<long double>(ecc[x] + 1);
    }
    if (estimate > static_cast<long double>(budget)) {
        throw MetricError("hull search space exceeds budget",
                          Witness{"BudgetExceeded", {n}, {static_cast<Scaled>(budget)}});
    }
    auto u = [&](int x, int y) { return X.d(x, y) / Q; };

    // Backtracking with interval propagation. Extremal forms are 1-Lipschitz,
    // so assigned coordinates bound unassigned ones from both sides.
    std::vector<MetricForm> forms;
    std::vector<Scaled> f(n, 0);
    std::vector<std::vector<Scaled>> lo(n + 1, std::vector<Scaled>(n));
    std::vector<std::vector<Scaled>> hi(n + 1, std::vector<Scaled>(n));
    for (int x = 0; x < n; ++x) {
        lo[0][x] = 0;
        hi[0][x] = ecc[x];
    }
    std::uint64_t nodes = 0;

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            // Tightness: every coordinate is matched by some partner.
            for (int x = 0; x < n; ++x) {
                bool tight = false;
                for (int y = 0; y < n && !tight; ++y) {
                    tight = (f[x] + f[y] == u(x, y));
                }
                if (!tight) return;
            }
            MetricForm form;
            form.values.resize(n);
            for (int x = 0; x < n; ++x) form.values[x] = f[x] * Q;
            forms.push_back(std::move(form));
            return;
        }
        for (Scaled v = lo[depth][depth]; v <= hi[depth][depth]; ++v) {
            if (++nodes > budget) {
                throw MetricError("hull enumeration budget exceeded",
                                  Witness{"BudgetExceeded", {depth}, {static_cast<Scaled>(budget)}});
            }
            f[depth] = v;
            bool feasible = true;
            for (int x = 0; x < n; ++x) {
                Scaled l = lo[depth][x];
                Scaled h = hi[depth][x];
                if (x > depth) {
                    l = std::max(l, u(depth, x) - v);
                    h = std::min(h, u(depth, x) + v);
                    if (l > h) {
                        feasible = false;
                        break;
                    }
                }
                lo[depth + 1][x] = l;
                hi[depth + 1][x] = h;
            }
            if (feasible) self(self, depth + 1);
        }
    };
    dfs(dfs, 0);
    std::sort(forms.begin(), forms.end());
    return forms;
}

namespace {

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int n = 0, bool ones = false)
        : w(static_cast<std::size_t>((n + 63) / 64), ones ? ~0ULL : 0ULL) {
        if (ones && n % 64 != 0 && !w.empty()) w.back() = (1ULL << (n % 64)) - 1;
    }
    void set(int i) { w[i / 64] |= 1ULL << (i % 64); }
    bool test(int i) const { return (w[i / 64] >> (i % 64)) & 1; }
    void intersect(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool operator<(const Bits& o) const { return w < o.w; }
};

}  // namespace

HellyResult is_helly(const Graph& g) {
    auto X = graph_metric(g);
    const int n = g.n;
    // Distinct combinatorial balls, each with its lexicographically smallest
    // (center, radius) representative.
    std::vector<std::pair<Ball, Bits>> balls;
    std::map<std::vector<std::uint64_t>, int> seen;
    for (int v = 0; v < n; ++v) {
        Scaled ecc = X.eccentricity(v);
        for (Scaled r = 0; r <= ecc; ++r) {
            Bits mask(n);
            for (int z = 0; z < n; ++z) {
                if (X.d(v, z) <= r) mask.set(z);
            }
            if (seen.emplace(mask.w, static_cast<int>(balls.size())).second) {
                balls.emplace_back(Ball{v, r}, std::move(mask));
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (int w = v + 1; w < n; ++w) {
                Bits common(n, true);
                bool nonempty_family = false;
                for (const auto& [ball, mask] : balls) {
                    int hits = mask.test(u) + mask.test(v) + mask.test(w);
                    if (hits >= 2) {
                        common.intersect(mask);
                        nonempty_family = true;
                    }
                }
                if (nonempty_family && !common.any()) {
                    // Shrink to a witness subfamily that still has empty
                    // total intersection.
                    std::vector<Ball> witness;
                    Bits running(n, true);
                    for (const auto& [ball, mask] : balls) {
                        int hits = mask.test(u) + mask.test(v) + mask.test(w);
                        if (hits < 2) continue;
                        Bits next = running;
                        next.intersect(mask);
                        if (next.w != running.w) {
                            witness.push_back(ball);
                            running = next;
                            if (!running.any()) break;
                        }
                    }
                    return {false, std::move(witness)};
                }
            }
        }
    }
    return {};
}

HullGraph hull_graph(const FiniteMetricSpace& X, std::uint64_t budget) {
    HullGraph hull;
    hull.forms = enumerate_hull_vertices(X, budget);
    const int m = static_cast<int>(hull.forms.size());
    const Scaled Q = X.scale();

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (dinf(hull.forms[i], hull.forms[j]) == Q) edges.emplace_back(i, j);
        }
    }
    hull.graph = Graph::make(m, std::move(edges));
    if (!hull.graph.is_connected()) {
        throw MetricError("hull graph metric does not match dinf (disconnected)",
                          Witness{"MetricMismatch", {}, {}});
    }
    auto hop = graph_metric(hull.graph);
    std::vector<std::vector<Scaled>> dist(m, std::vector<Scaled>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Scaled via_graph = hop.d(i, j) * Q;
            Scaled via_forms = dinf(hull.forms[i], hull.forms[j]);
            if (via_graph != via_forms) {
                throw MetricError("hull graph metric does not match dinf",
                                  Witness{"MetricMismatch", {i, j}, {via_graph, via_forms}});
            }
            dist[i][j] = via_graph;
        }
    }
    hull.metric = FiniteMetricSpace::validate(dist, Q);

    hull.embedding.resize(X.n());
    for (int x = 0; x < X.n(); ++x) {
        auto e = kuratowski(X, x);
        auto it = std::lower_bound(hull.forms.begin(), hull.forms.end(), e);
        if (it == hull.forms.end() || !(*it == e)) {
            throw MetricError("Kuratowski form missing from hull",
                              Witness{"MetricMismatch", {x}, {}});
        }
        hull.embedding[x] = static_cast<int>(it - hull.forms.begin());
    }
    for (int x = 0; x < X.n(); ++x) {
        for (int y = 0; y < X.n(); ++y) {
            if (hull.metric.d(hull.embedding[x], hull.embedding[y]) != X.d(x, y)) {
                throw MetricError("embedding is not isometric",
                                  Witness{"MetricMismatch", {x, y}, {X.d(x, y)}});
            }
        }
    }
    auto helly = is_helly(hull.graph);
    if (!helly.helly) {
        Witness w{"NotHelly", {}, {}};
        for (const auto& ball : helly.witness_family) {
            w.indices.push_back(ball.center);
            w.values.push_back(ball.radius);
        }
        throw MetricError("hull graph is not Helly", w);
    }
    return hull;
}

Tripod tripod(const FiniteMetricSpace& X, int x1, int x2, int x3) {
    if (!X.is_integer_metric()) {
        throw MetricError("tripod needs an integer metric", Witness{"NonIntegerMetric", {}, {}});
    }
    const Scaled Q = X.scale();
    const Scaled u12 = X.d(x1, x2) / Q;
    const Scaled u13 = X.d(x1, x3) / Q;
    const Scaled u23 = X.d(x2, x3) / Q;
    // Doubled Gromov products; all share the perimeter's parity.
    const Scaled A1 = u12 + u13 - u23;
    const Scaled A2 = u12 + u23 - u13;
    const Scaled A3 = u13 + u23 - u12;
    const bool odd = (u12 + u13 + u23) % 2 != 0;

    Tripod result;
    result.slack = odd ? 1 : 0;
    const Scaled r1 = (A1 + (odd ? 1 : 0)) / 2;
    const Scaled r2 = (A2 + (odd ? 1 : 0)) / 2;
    const Scaled r3 = (A3 + (odd ? 1 : 0)) / 2;
    for (int p = 0; p < X.n(); ++p) {
        if (X.d(x1, p) <= r1 * Q && X.d(x2, p) <= r2 * Q && X.d(x3, p) <= r3 * Q) {
            result.center = p;
            break;
        }
    }
    if (result.center < 0) {
        throw MetricError("tripod balls have empty total intersection",
                          Witness{"NotHelly", {x1, x2, x3}, {r1 * Q, r2 * Q, r3 * Q}});
    }
    result.legs[0] = first_geodesic(X, x1, result.center);
    result.legs[1] = first_geodesic(X, x2, result.center);
    result.legs[2] = first_geodesic(X, x3, result.center);
    return result;
}

}  // namespace coarse
