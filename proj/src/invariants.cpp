#include "coarse/invariants.hpp"

#include <algorithm>
#include <map>

namespace coarse {

Subset coarse_projection(const FiniteMetricSpace& X, const Subset& Y, int x, Scaled slack) {
    const Scaled dY = X.d(x, Y);
    std::vector<int> members;
    for (int y : Y.members) {
        if (X.d(x, y) <= dY + slack) members.push_back(y);
    }
    return Subset{std::move(members)};
}

Subset projection_of_set(const FiniteMetricSpace& X, const Subset& Y,
                         const std::vector<int>& points, Scaled slack) {
    std::vector<int> all;
    for (int p : points) {
        auto proj = coarse_projection(X, Y, p, slack);
        all.insert(all.end(), proj.members.begin(), proj.members.end());
    }
    return Subset::of(std::move(all));
}

namespace {

// Diameter of a subset, with the lexicographically first pair achieving it.
std::pair<Scaled, std::pair<int, int>> subset_diameter(const FiniteMetricSpace& X,
                                                       const Subset& s) {
    Scaled best = 0;
    std::pair<int, int> pair{s.members.empty() ? -1 : s.members[0],
                             s.members.empty() ? -1 : s.members[0]};
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        for (std::size_t j = i; j < s.members.size(); ++j) {
            Scaled v = X.d(s.members[i], s.members[j]);
            if (v > best) {
                best = v;
                pair = {s.members[i], s.members[j]};
            }
        }
    }
    return {best, pair};
}

}  // namespace

ContractionReport contraction_constant(const FiniteMetricSpace& X, const Subset& Y,
                                       Scaled slack) {
    if (Y.empty()) {
        throw MetricError("contraction over empty subset", Witness{"EmptySubset", {}, {}});
    }
    // Pointwise projections, computed once.
    std::vector<Subset> proj(X.n());
    for (int x = 0; x < X.n(); ++x) proj[x] = coarse_projection(X, Y, x, slack);

    ContractionReport report;
    report.vacuous = true;
    for (int x = 0; x < X.n(); ++x) {
        const Scaled dY = X.d(x, Y);
        if (dY == 0) continue;  // every ball around x meets Y or x itself is in Y
        // Critical radii: ball membership only changes at distances from x.
        std::vector<Scaled> radii;
        for (int z = 0; z < X.n(); ++z) {
            Scaled r = X.d(x, z);
            if (r < dY) radii.push_back(r);
        }
        std::sort(radii.begin(), radii.end());
        radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
        for (Scaled r : radii) {
            auto members = X.ball_members(Ball{x, r});
            std::vector<int> image;
            for (int m : members.members) {
                image.insert(image.end(), proj[m].members.begin(), proj[m].members.end());
            }
            auto [diam, pair] = subset_diameter(X, Subset::of(std::move(image)));
            if (report.vacuous || diam > report.constant) {
                report.vacuous = false;
                report.constant = diam;
                report.witness_ball = Ball{x, r};
                report.witness_pair = pair;
            }
        }
    }
    if (report.vacuous) {
        report.constant = 0;
        report.witness_ball = Ball{-1, 0};
    }
    return report;
}

bool is_strongly_contracting(const FiniteMetricSpace& X, const Subset& Y, Scaled bound,
                             Scaled slack) {
    return contraction_constant(X, Y, slack).constant <= bound;
}

MorseReport morse_constant(const FiniteMetricSpace& X, const Subset& Y, const Rat& lambda,
                           const Rat& eps, std::uint64_t budget) {
    if (Y.empty()) {
        throw MetricError("morse constant over empty subset", Witness{"EmptySubset", {}, {}});
    }
    MorseReport report;
    report.lambda = lambda;
    report.eps = eps;
    if (static_cast<int>(Y.size()) == X.n()) {
        return report;  // every path point lies on Y
    }
    if (Y.size() < 2) {
        report.vacuous = true;  // no endpoint pair, empty family
        return report;
    }
    std::uint64_t remaining = budget;
    for (std::size_t i = 0; i < Y.size() && report.exact; ++i) {
        for (std::size_t j = i + 1; j < Y.size() && report.exact; ++j) {
            auto enumeration = enumerate_quasi_geodesics(X, Y.members[i], Y.members[j],
                                                         lambda, eps, remaining);
            remaining -= std::min(remaining, enumeration.expansions);
            if (!enumeration.complete) report.exact = false;
            for (const auto& path : enumeration.paths) {
                for (int p : path.points) {
                    Scaled v = X.d(p, Y);
                    if (v > report.constant || report.witness_point < 0) {
                        report.constant = v;
                        report.witness_path = path;
                        report.witness_point = p;
                    }
                }
            }
        }
    }
    return report;
}

HyperbolicityReport gromov_delta(const FiniteMetricSpace& X, const std::optional<Subset>& S) {
    std::vector<int> pts;
    if (S) {
        pts = S->members;
    } else {
        pts.resize(X.n());
        for (int i = 0; i < X.n(); ++i) pts[i] = i;
    }
    if (pts.size() < 4) {
        throw MetricError("need at least four points",
                          Witness{"TooFewPoints", {static_cast<std::int64_t>(pts.size())}, {}});
    }
    HyperbolicityReport report;
    bool first = true;
    const std::size_t m = pts.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                for (std::size_t e = c + 1; e < m; ++e) {
                    int x = pts[a], y = pts[b], w = pts[c], z = pts[e];
                    Scaled s1 = X.d(x, y) + X.d(w, z);
                    Scaled s2 = X.d(x, w) + X.d(y, z);
                    Scaled s3 = X.d(x, z) + X.d(y, w);
                    Scaled hi = std::max({s1, s2, s3});
                    Scaled lo = std::min({s1, s2, s3});
                    Scaled mid = s1 + s2 + s3 - hi - lo;
                    Scaled defect = hi - mid;
                    if (first || defect > report.delta) {
                        first = false;
                        report.delta = defect;
                        report.witness_quadruple = {x, y, w, z};
                    }
                }
            }
        }
    }
    return report;
}

HyperbolicityReport delta_with_added_points(const FiniteMetricSpace& X, const Subset& Y,
                                            int x, int y) {
    std::vector<int> pts = Y.members;
    pts.push_back(x);
    pts.push_back(y);
    return gromov_delta(X, std::optional<Subset>(Subset::of(std::move(pts))));
}

BoundedJumpResult bounded_jump_check(const FiniteMetricSpace& X, const DiscretePath& gamma1,
                                     const DiscretePath& gamma2, int x, Scaled Dprime,
                                     Scaled slack) {
    if (gamma1.points.empty() || gamma2.points.empty() ||
        gamma1.points.back() != gamma2.points.front()) {
        throw MetricError("paths are not concatenable",
                          Witness{"NotConcatenable",
                                  {gamma1.points.empty() ? -1 : gamma1.points.back(),
                                   gamma2.points.empty() ? -1 : gamma2.points.front()},
                                  {}});
    }
    const int p = gamma1.points.back();
    auto set1 = Subset::of(gamma1.points);
    auto set2 = Subset::of(gamma2.points);
    auto proj1 = projection_of_set(X, set1, {x}, slack);
    auto proj2 = projection_of_set(X, set2, {x}, slack);

    Scaled d1 = -1;
    for (int q : proj1.members) d1 = (d1 < 0) ? X.d(q, p) : std::min(d1, X.d(q, p));
    BoundedJumpResult result;
    if (d1 < Dprime) {
        result.vacuous = true;
        return result;
    }
    for (int q : proj2.members) {
        if (X.d(q, p) > Dprime) {
            result.ok = false;
            result.witness = Witness{"JumpTooFar", {x, q, p}, {X.d(q, p), Dprime}};
            return result;
        }
    }
    return result;
}

LocalScanResult local_contraction_scan(const FiniteMetricSpace& X, const DiscretePath& path,
                                       int L, Scaled D, const Rat& k, const Rat& c,
                                       Scaled slack) {
    if (L < 1) {
        throw MetricError("window length must be >= 1", Witness{"BadWindow", {L}, {}});
    }
    const int len = path.steps();
    std::map<std::vector<int>, Scaled> contraction_cache;
    for (int s = 0; s <= len; ++s) {
        for (int t = s + 1; t <= std::min(len, s + L); ++t) {
            DiscretePath window;
            window.points.assign(path.points.begin() + s, path.points.begin() + t + 1);
            window.lambda = k;
            window.eps = c;
            if (!is_quasi_geodesic(X, window).ok) {
                return {false, std::make_pair(s, t)};
            }
            auto key = Subset::of(window.points).members;
            auto it = contraction_cache.find(key);
            Scaled constant;
            if (it != contraction_cache.end()) {
                constant = it->second;
            } else {
                constant = contraction_constant(X, Subset{key}, slack).constant;
                contraction_cache.emplace(std::move(key), constant);
            }
            if (constant > D) {
                return {false, std::make_pair(s, t)};
            }
        }
    }
    return {};
}

}  // namespace coarse
