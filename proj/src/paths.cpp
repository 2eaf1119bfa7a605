#include "coarse/paths.hpp"

#include <algorithm>
#include <numeric>

namespace coarse {

namespace {

using I128 = __int128;

// g / lambda - eps <= d / Q, exactly.
bool lower_bound_ok(std::int64_t gap, const Rat& lambda, const Rat& eps, Scaled d, Scaled Q) {
    // gap*b*f*Q - a*e*Q <= a*f*d
    I128 lhs = I128(gap) * lambda.den * eps.den * Q - I128(lambda.num) * eps.num * Q;
    I128 rhs = I128(lambda.num) * eps.den * d;
    return lhs <= rhs;
}

}  // namespace

Rat Rat::of(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) {
        throw MetricError("rational parameters must be nonnegative with positive denominator",
                          Witness{"BadRational", {num, den}, {}});
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    return Rat{num / g, den / g};
}

bool rat_le(const Rat& a, const Rat& b) {
    return I128(a.num) * b.den <= I128(b.num) * a.den;
}

QuasiGeodesicCheck is_quasi_geodesic(const FiniteMetricSpace& X, const DiscretePath& path) {
    const auto& p = path.points;
    const Scaled Q = X.scale();
    const int L = static_cast<int>(p.size());
    for (int j = 1; j < L; ++j) {
        if (X.d(p[j - 1], p[j]) > Q) {
            return {false, std::make_pair(j - 1, j)};
        }
        for (int i = 0; i < j; ++i) {
            if (!lower_bound_ok(j - i, path.lambda, path.eps, X.d(p[i], p[j]), Q)) {
                return {false, std::make_pair(i, j)};
            }
        }
    }
    return {true, std::nullopt};
}

EnumerationResult enumerate_quasi_geodesics(const FiniteMetricSpace& X, int x, int y,
                                            const Rat& lambda, const Rat& eps,
                                            std::uint64_t budget) {
    if (x == y) {
        throw MetricError("degenerate enumeration x == y", Witness{"DegenerateEndpoints", {x}, {}});
    }
    if (rat_le(lambda, Rat{0, 1}) || !rat_le(Rat{1, 1}, lambda)) {
        throw MetricError("lambda must be >= 1", Witness{"BadRational", {lambda.num, lambda.den}, {}});
    }
    const Scaled Q = X.scale();
    const int n = X.n();

    // Longest admissible step count: L/lambda - eps <= d(x,y)/Q.
    I128 num = I128(lambda.num) * eps.den * X.d(x, y) + I128(lambda.num) * eps.num * Q;
    I128 den = I128(lambda.den) * eps.den * Q;
    std::int64_t max_steps = static_cast<std::int64_t>(num / den);

    // Unit-step candidates, ascending.
    std::vector<std::vector<int>> next(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (X.d(u, v) <= Q) next[u].push_back(v);
        }
    }

    EnumerationResult result;
    std::vector<int> path{x};
    bool stopped = false;

    auto dfs = [&](auto&& self) -> void {
        if (stopped) return;
        if (path.size() >= 2 && path.back() == y) {
            result.paths.push_back(DiscretePath{path, lambda, eps});
        }
        if (static_cast<std::int64_t>(path.size()) - 1 >= max_steps) return;
        const int t = static_cast<int>(path.size());
        for (int v : next[path.back()]) {
            bool ok = true;
            for (int i = 0; i < t; ++i) {
                if (!lower_bound_ok(t - i, lambda, eps, X.d(path[i], v), Q)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (result.expansions >= budget) {
                stopped = true;
                return;
            }
            ++result.expansions;
            path.push_back(v);
            self(self);
            path.pop_back();
            if (stopped) return;
        }
    };
    dfs(dfs);
    result.complete = !stopped;
    return result;
}

EnumerationResult enumerate_geodesics(const FiniteMetricSpace& X, int x, int y,
                                      std::uint64_t budget) {
    const Scaled Q = X.scale();
    const int n = X.n();
    EnumerationResult result;
    std::vector<int> path{x};
    bool stopped = false;

    auto dfs = [&](auto&& self) -> void {
        if (stopped) return;
        int u = path.back();
        if (u == y) {
            result.paths.push_back(DiscretePath{path, Rat{1, 1}, Rat{0, 1}});
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (X.d(u, v) == Q && X.d(v, y) == X.d(u, y) - Q) {
                if (result.expansions >= budget) {
                    stopped = true;
                    return;
                }
                ++result.expansions;
                path.push_back(v);
                self(self);
                path.pop_back();
                if (stopped) return;
            }
        }
    };
    dfs(dfs);
    result.complete = !stopped;
    return result;
}

std::uint64_t count_geodesics(const FiniteMetricSpace& X, int x, int y) {
    const Scaled Q = X.scale();
    const int n = X.n();
    std::vector<int> order;
    for (int u = 0; u < n; ++u) {
        if (X.d(x, u) + X.d(u, y) == X.d(x, y)) order.push_back(u);
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return X.d(x, a) < X.d(x, b); });
    std::vector<std::uint64_t> cnt(n, 0);
    cnt[x] = 1;
    for (int u : order) {
        if (cnt[u] == 0) continue;
        for (int v : order) {
            if (X.d(u, v) == Q && X.d(x, v) == X.d(x, u) + Q) cnt[v] += cnt[u];
        }
    }
    return cnt[y];
}

std::vector<int> first_geodesic(const FiniteMetricSpace& X, int x, int y) {
    const Scaled Q = X.scale();
    std::vector<int> path{x};
    int u = x;
    while (u != y) {
        int chosen = -1;
        for (int v = 0; v < X.n(); ++v) {
            if (X.d(u, v) == Q && X.d(v, y) == X.d(u, y) - Q) {
                chosen = v;
                break;
            }
        }
        if (chosen < 0) {
            throw MetricError("no unit geodesic step (non-integer metric?)",
                              Witness{"NoGeodesicStep", {u, y}, {X.d(u, y)}});
        }
        path.push_back(chosen);
        u = chosen;
    }
    return path;
}

}  // namespace coarse
