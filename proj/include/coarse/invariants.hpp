#pragma once

#include <array>
#include <optional>
#include <vector>

#include "coarse/metric_space.hpp"
#include "coarse/paths.hpp"

namespace coarse {

// Coarse closest-point projection: { y in Y : d(x,y) <= d(x,Y) + slack }.
// The default slack is 1 * scale (pass X.scale()).
Subset coarse_projection(const FiniteMetricSpace& X, const Subset& Y, int x, Scaled slack);

// Union of pointwise projections of a set of points.
Subset projection_of_set(const FiniteMetricSpace& X, const Subset& Y,
                         const std::vector<int>& points, Scaled slack);

struct ContractionReport {
    Scaled constant = 0;
    Ball witness_ball;
    std::pair<int, int> witness_pair{-1, -1};
    bool vacuous = false;  // no ball disjoint from Y
};

// Exact sup over all balls disjoint from Y of diam(pi_Y(B)). Candidate radii
// per center x are the critical values {d(x,z)} below d(x,Y). Ties break
// lexicographically (center, radius, pair).
ContractionReport contraction_constant(const FiniteMetricSpace& X, const Subset& Y, Scaled slack);

bool is_strongly_contracting(const FiniteMetricSpace& X, const Subset& Y, Scaled bound,
                             Scaled slack);

struct MorseReport {
    Rat lambda{1, 1};
    Rat eps{0, 1};
    Scaled constant = 0;
    bool exact = true;  // false: lower bound, enumeration budget ran out
    DiscretePath witness_path;
    int witness_point = -1;
    bool vacuous = false;
};

// Max over all unit-step (lambda,eps)-quasi-geodesics with endpoints on Y of
// the max distance of a path point to Y. Exact when the budget suffices.
MorseReport morse_constant(const FiniteMetricSpace& X, const Subset& Y, const Rat& lambda,
                           const Rat& eps, std::uint64_t budget);

struct HyperbolicityReport {
    Scaled delta = 0;
    std::array<int, 4> witness_quadruple{-1, -1, -1, -1};
};

// Gromov 4-point delta over quadruples of S (all of X when S is absent).
HyperbolicityReport gromov_delta(const FiniteMetricSpace& X,
                                 const std::optional<Subset>& S = std::nullopt);

HyperbolicityReport delta_with_added_points(const FiniteMetricSpace& X, const Subset& Y,
                                            int x, int y);

struct BoundedJumpResult {
    bool ok = true;
    bool vacuous = false;  // antecedent false
    std::optional<Witness> witness;
};

// gamma1 must end where gamma2 starts (concatenation point p). Checks:
// d(pi_{gamma1}(x), p) >= Dprime implies every point of pi_{gamma2}(x) is
// within Dprime of p.
BoundedJumpResult bounded_jump_check(const FiniteMetricSpace& X, const DiscretePath& gamma1,
                                     const DiscretePath& gamma2, int x, Scaled Dprime,
                                     Scaled slack);

struct LocalScanResult {
    bool ok = true;
    std::optional<std::pair<int, int>> bad_window;  // first (s,t) by s then t
};

// Checks every window of parameter length <= L for (k,c)-quasi-geodesity and
// D-strong contraction of its point set.
LocalScanResult local_contraction_scan(const FiniteMetricSpace& X, const DiscretePath& path,
                                       int L, Scaled D, const Rat& k, const Rat& c,
                                       Scaled slack);

}  // namespace coarse
