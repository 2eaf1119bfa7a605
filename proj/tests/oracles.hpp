#pragma once

// Independent brute-force oracles. Each one recomputes an invariant straight
// from its definition, sharing no search strategy with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "coarse/hull.hpp"
#include "coarse/invariants.hpp"
#include "coarse/metric_space.hpp"
#include "coarse/paths.hpp"

namespace oracle {

using coarse::FiniteMetricSpace;
using coarse::Graph;
using coarse::MetricForm;
using coarse::Rat;
using coarse::Scaled;
using coarse::Subset;

inline std::vector<std::vector<Scaled>> floyd_warshall(const Graph& g) {
    const Scaled inf = std::numeric_limits<Scaled>::max() / 4;
    std::vector dist(g.n, std::vector<Scaled>(g.n, inf));
    for (int i = 0; i < g.n; ++i) dist[i][i] = 0;
    for (auto [u, v] : g.edges) dist[u][v] = dist[v][u] = 1;
    for (int k = 0; k < g.n; ++k) {
        for (int i = 0; i < g.n; ++i) {
            for (int j = 0; j < g.n; ++j) {
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
            }
        }
    }
    return dist;
}

inline Subset brute_projection(const FiniteMetricSpace& X, const Subset& Y, int x, Scaled slack) {
    Scaled best = -1;
    for (int y : Y.members) {
        if (best < 0 || X.d(x, y) < best) best = X.d(x, y);
    }
    std::vector<int> out;
    for (int y : Y.members) {
        if (X.d(x, y) <= best + slack) out.push_back(y);
    }
    return Subset::of(std::move(out));
}

// Sup over all balls disjoint from Y of diam of the union of projections.
inline Scaled brute_contraction(const FiniteMetricSpace& X, const Subset& Y, Scaled slack) {
    std::set<Scaled> radii{0};
    for (int x = 0; x < X.n(); ++x) {
        for (int y = 0; y < X.n(); ++y) radii.insert(X.d(x, y));
    }
    Scaled best = 0;
    for (int c = 0; c < X.n(); ++c) {
        for (Scaled r : radii) {
            if (X.d(c, Y) <= r) continue;  // ball meets Y
            std::set<int> proj;
            for (int p = 0; p < X.n(); ++p) {
                if (X.d(c, p) > r) continue;
                for (int y : brute_projection(X, Y, p, slack).members) proj.insert(y);
            }
            for (int a : proj) {
                for (int b : proj) best = std::max(best, X.d(a, b));
            }
        }
    }
    return best;
}

// Every unit-step (lambda,eps)-quasi-geodesic from x to y, by filtering all
// unit-step sequences up to the defining length bound.
inline std::vector<std::vector<int>> brute_quasi_geodesics(const FiniteMetricSpace& X, int x,
                                                           int y, const Rat& lambda,
                                                           const Rat& eps) {
    const Scaled Q = X.scale();
    auto pair_ok = [&](std::int64_t gap, Scaled d) {
        using I = __int128;
        return I(gap) * lambda.den * eps.den * Q - I(lambda.num) * eps.num * Q <=
               I(lambda.num) * eps.den * d;
    };
    int max_steps = 0;
    while (pair_ok(max_steps + 1, X.d(x, y))) ++max_steps;

    std::vector<std::vector<int>> out;
    std::vector<int> seq{x};
    auto rec = [&](auto&& self) -> void {
        if (seq.size() >= 2 && seq.back() == y) {
            bool ok = true;
            for (std::size_t j = 1; j < seq.size() && ok; ++j) {
                for (std::size_t i = 0; i < j && ok; ++i) {
                    if (!pair_ok(static_cast<std::int64_t>(j - i), X.d(seq[i], seq[j]))) ok = false;
                }
            }
            if (ok) out.push_back(seq);
        }
        if (static_cast<int>(seq.size()) - 1 >= max_steps) return;
        for (int v = 0; v < X.n(); ++v) {
            if (X.d(seq.back(), v) > Q) continue;
            bool viable = true;
            for (std::size_t i = 0; i < seq.size() && viable; ++i) {
                if (!pair_ok(static_cast<std::int64_t>(seq.size() - i), X.d(seq[i], v))) {
                    viable = false;
                }
            }
            if (!viable) continue;
            seq.push_back(v);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline Scaled brute_morse(const FiniteMetricSpace& X, const Subset& Y, const Rat& lambda,
                          const Rat& eps) {
    Scaled worst = 0;
    for (std::size_t i = 0; i < Y.size(); ++i) {
        for (std::size_t j = i + 1; j < Y.size(); ++j) {
            for (const auto& path :
                 brute_quasi_geodesics(X, Y.members[i], Y.members[j], lambda, eps)) {
                for (int p : path) worst = std::max(worst, X.d(p, Y));
            }
        }
    }
    return worst;
}

inline Scaled brute_delta(const FiniteMetricSpace& X) {
    Scaled delta = 0;
    for (int a = 0; a < X.n(); ++a) {
        for (int b = a + 1; b < X.n(); ++b) {
            for (int c = b + 1; c < X.n(); ++c) {
                for (int e = c + 1; e < X.n(); ++e) {
                    Scaled s1 = X.d(a, b) + X.d(c, e);
                    Scaled s2 = X.d(a, c) + X.d(b, e);
                    Scaled s3 = X.d(a, e) + X.d(b, c);
                    Scaled hi = std::max({s1, s2, s3});
                    Scaled lo = std::min({s1, s2, s3});
                    Scaled mid = s1 + s2 + s3 - hi - lo;
                    delta = std::max(delta, hi - mid);
                }
            }
        }
    }
    return delta;
}

// All integer metric forms in the eccentricity box (Delta membership pruned
// during the scan), filtered by decrement-minimality: f is a hull vertex iff
// no single coordinate can be lowered by one scale step within Delta.
inline std::vector<MetricForm> brute_hull(const FiniteMetricSpace& X) {
    const Scaled Q = X.scale();
    const int n = X.n();
    std::vector<Scaled> ecc(n);
    for (int x = 0; x < n; ++x) ecc[x] = X.eccentricity(x);

    std::vector<MetricForm> out;
    std::vector<Scaled> f(n, 0);
    auto in_delta_if_lowered = [&](int x) {
        if (f[x] < Q) return false;
        for (int y = 0; y < n; ++y) {
            Scaled fy = (y == x) ? f[x] - Q : f[y];
            if (f[x] - Q + fy < X.d(x, y)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            for (int z = 0; z < n; ++z) {
                if (in_delta_if_lowered(z)) return;
            }
            out.push_back(MetricForm{f});
            return;
        }
        // Delta lower bounds against assigned coordinates; 1-Lipschitz upper
        // bounds (minimal forms are 1-Lipschitz) keep the box tractable.
        Scaled lo = 0;
        Scaled hi = ecc[x];
        for (int y = 0; y < x; ++y) {
            lo = std::max(lo, X.d(x, y) - f[y]);
            hi = std::min(hi, f[y] + X.d(x, y));
        }
        for (Scaled v = lo; v <= hi; v += Q) {
            f[x] = v;
            self(self, x + 1);
        }
        f[x] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Helly via maximal cliques of the ball-intersection graph (Bron-Kerbosch on
// distinct balls). Exact for every family size.
inline bool brute_helly(const Graph& g) {
    auto dist = floyd_warshall(g);
    const int n = g.n;
    Scaled diam = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) diam = std::max(diam, dist[i][j]);
    }
    std::vector<std::uint64_t> balls;
    for (int c = 0; c < n; ++c) {
        for (Scaled r = 0; r <= diam; ++r) {
            std::uint64_t mask = 0;
            for (int v = 0; v < n; ++v) {
                if (dist[c][v] <= r) mask |= 1ULL << v;
            }
            balls.push_back(mask);
        }
    }
    std::sort(balls.begin(), balls.end());
    balls.erase(std::unique(balls.begin(), balls.end()), balls.end());

    const int m = static_cast<int>(balls.size());
    if (m > 64) throw std::runtime_error("brute_helly: graph too large");
    std::vector<std::uint64_t> adj(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && (balls[i] & balls[j])) adj[i] |= 1ULL << j;
        }
    }
    bool ok = true;
    auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (!ok) return;
        if (!p && !x) {
            std::uint64_t common = ~0ULL;
            for (int i = 0; i < m; ++i) {
                if (r >> i & 1) common &= balls[i];
            }
            if (!common) ok = false;
            return;
        }
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        for (std::uint64_t cand = p & ~adj[pivot]; cand;) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, r | 1ULL << v, p & adj[v], x & adj[v]);
            p &= ~(1ULL << v);
            x |= 1ULL << v;
        }
    };
    bk(bk, 0, m == 64 ? ~0ULL : (1ULL << m) - 1, 0);
    return ok;
}

}  // namespace oracle
