#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coarse/generators.hpp"
#include "coarse/invariants.hpp"
#include "oracles.hpp"

using namespace coarse;

TEST_CASE("coarse projection matches the definitional scan") {
    std::mt19937_64 rng(5);
    for (const auto& g : {gen::cycle(7), gen::grid(3, 3), gen::king(2, 4), gen::random_tree(9, 2)}) {
        auto X = graph_metric(g);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> pts;
            for (int v = 0; v < X.n(); ++v) {
                if (rng() % 3 == 0) pts.push_back(v);
            }
            if (pts.empty()) pts.push_back(static_cast<int>(rng() % X.n()));
            auto Y = Subset::of(pts);
            for (int x = 0; x < X.n(); ++x) {
                for (Scaled slack : {Scaled{0}, Scaled{1}, Scaled{2}}) {
                    CHECK(coarse_projection(X, Y, x, slack).members ==
                          oracle::brute_projection(X, Y, x, slack).members);
                }
            }
        }
    }
}

TEST_CASE("projection grows with slack") {
    auto X = graph_metric(gen::grid(4, 4));
    auto Y = Subset{{0, 1, 2, 3}};
    for (int x = 0; x < X.n(); ++x) {
        auto small = coarse_projection(X, Y, x, 1);
        auto big = coarse_projection(X, Y, x, 2);
        for (int y : small.members) CHECK(big.contains(y));
    }
}

TEST_CASE("contraction constant matches the exhaustive ball scan") {
    struct Case {
        Graph g;
        std::vector<int> y;
    };
    std::vector<Case> cases = {
        {gen::path(6), {0, 1, 2}},
        {gen::cycle(6), {0, 1, 2, 3}},
        {gen::cycle(8), {0, 1, 2, 3, 4}},
        {gen::grid(3, 3), {0, 1, 2}},
        {gen::king(2, 4), {0, 1, 2, 3}},
        {gen::random_tree(9, 4), {0, 1}},
        {gen::caterpillar(6, 2), {0, 1, 2, 3, 4, 5}},
    };
    for (const auto& [g, y] : cases) {
        auto X = graph_metric(g);
        auto Y = Subset::of(y);
        auto got = contraction_constant(X, Y, X.scale());
        CHECK(got.constant == oracle::brute_contraction(X, Y, X.scale()));
        if (!got.vacuous) {
            CHECK(is_strongly_contracting(X, Y, got.constant, X.scale()));
            if (got.constant > 0) {
                CHECK(!is_strongly_contracting(X, Y, got.constant - 1, X.scale()));
            }
        }
    }
}

TEST_CASE("contraction is vacuous when no ball misses Y") {
    auto X = graph_metric(gen::cycle(5));
    auto all = Subset{{0, 1, 2, 3, 4}};
    auto rep = contraction_constant(X, all, X.scale());
    CHECK(rep.vacuous);
    CHECK(rep.constant == 0);
}

TEST_CASE("morse constant matches brute-force quasi-geodesic enumeration") {
    struct Case {
        Graph g;
        std::vector<int> y;
    };
    std::vector<Case> cases = {
        {gen::path(5), {0, 4}},
        {gen::cycle(6), {0, 3}},
        {gen::cycle(7), {0, 2, 3}},
        {gen::king(2, 3), {0, 1, 2}},
        {gen::grid(3, 3), {0, 4, 8}},
    };
    std::vector<std::pair<Rat, Rat>> params = {
        {Rat{1, 1}, Rat{0, 1}}, {Rat{2, 1}, Rat{0, 1}}, {Rat{3, 2}, Rat{1, 1}}};
    for (const auto& [g, y] : cases) {
        auto X = graph_metric(g);
        auto Y = Subset::of(y);
        for (const auto& [lambda, eps] : params) {
            auto got = morse_constant(X, Y, lambda, eps, 50'000'000);
            REQUIRE(got.exact);
            CHECK(got.constant == oracle::brute_morse(X, Y, lambda, eps));
        }
    }
}

TEST_CASE("morse constant of the whole space is zero, small subsets are vacuous") {
    auto X = graph_metric(gen::cycle(6));
    auto whole = morse_constant(X, Subset{{0, 1, 2, 3, 4, 5}}, Rat{2, 1}, Rat{0, 1}, 1000);
    CHECK(whole.constant == 0);
    auto single = morse_constant(X, Subset{{2}}, Rat{2, 1}, Rat{0, 1}, 1000);
    CHECK(single.vacuous);
    CHECK(single.constant == 0);
}

TEST_CASE("morse budget exhaustion reports a lower bound") {
    auto X = graph_metric(gen::grid(3, 3));
    auto full = morse_constant(X, Subset{{0, 8}}, Rat{3, 1}, Rat{0, 1}, 50'000'000);
    REQUIRE(full.exact);
    auto cut = morse_constant(X, Subset{{0, 8}}, Rat{3, 1}, Rat{0, 1}, 5);
    CHECK(!cut.exact);
    CHECK(cut.constant <= full.constant);
}

TEST_CASE("gromov delta matches the quadruple scan") {
    std::mt19937_64 rng(11);
    for (const auto& g : {gen::cycle(4), gen::cycle(7), gen::grid(3, 3), gen::king(2, 4),
                          gen::random_tree(10, 6), gen::caterpillar(5, 3)}) {
        auto X = graph_metric(g);
        CHECK(gromov_delta(X).delta == oracle::brute_delta(X));
    }
    CHECK(gromov_delta(graph_metric(gen::cycle(4))).delta == 2);
    CHECK(gromov_delta(graph_metric(gen::random_tree(12, 9))).delta == 0);
}

TEST_CASE("gromov delta scales with the metric") {
    auto X = graph_metric(gen::cycle(7));
    std::vector<std::vector<Scaled>> tripled(X.n(), std::vector<Scaled>(X.n()));
    for (int i = 0; i < X.n(); ++i) {
        for (int j = 0; j < X.n(); ++j) tripled[i][j] = 3 * X.d(i, j);
    }
    auto X3 = FiniteMetricSpace::validate(tripled, 3);
    CHECK(gromov_delta(X3).delta == 3 * gromov_delta(X).delta);
}

TEST_CASE("gromov delta needs four points") {
    auto X = graph_metric(gen::path(3));
    CHECK_THROWS_AS(gromov_delta(X), MetricError);
}

TEST_CASE("delta over a subset plus two points matches the direct subset scan") {
    auto X = graph_metric(gen::grid(3, 3));
    auto Y = Subset{{0, 4, 8}};
    for (int x = 0; x < X.n(); ++x) {
        for (int y = 0; y < X.n(); ++y) {
            auto pts = Y.members;
            pts.push_back(x);
            pts.push_back(y);
            auto S = Subset::of(pts);
            if (S.size() < 4) continue;
            CHECK(delta_with_added_points(X, Y, x, y).delta ==
                  gromov_delta(X, S).delta);
        }
    }
}

TEST_CASE("bounded jump check finds the far projection on a cycle") {
    auto X = graph_metric(gen::cycle(8));
    DiscretePath g1{{0, 1, 2}, Rat{1, 1}, Rat{0, 1}};
    DiscretePath g2{{2, 3, 4}, Rat{1, 1}, Rat{0, 1}};
    auto res = bounded_jump_check(X, g1, g2, 6, 1, 1);
    CHECK(!res.vacuous);
    CHECK(!res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->kind == "JumpTooFar");

    // Large D' makes the consequent trivial.
    CHECK(bounded_jump_check(X, g1, g2, 6, 4, 1).ok);
    // x close to the concatenation point: antecedent fails.
    auto near = bounded_jump_check(X, g1, g2, 2, 3, 1);
    CHECK(near.vacuous);
    CHECK(near.ok);
}

TEST_CASE("bounded jump check rejects non-concatenable paths") {
    auto X = graph_metric(gen::cycle(8));
    DiscretePath g1{{0, 1}, Rat{1, 1}, Rat{0, 1}};
    DiscretePath g2{{3, 4}, Rat{1, 1}, Rat{0, 1}};
    CHECK_THROWS_AS(bounded_jump_check(X, g1, g2, 6, 1, 1), MetricError);
}

TEST_CASE("local contraction scan flags the first bad window") {
    auto X = graph_metric(gen::grid(4, 4));
    std::vector<int> stairs{0, 1, 5, 6, 10, 11, 15};
    DiscretePath path{stairs, Rat{3, 1}, Rat{2, 1}};
    Scaled global = contraction_constant(X, Subset::of(stairs), 1).constant;
    auto ok = local_contraction_scan(X, path, path.steps(), global, Rat{3, 1}, Rat{2, 1}, 1);
    CHECK(ok.ok);
    auto bad = local_contraction_scan(X, path, path.steps(), -1, Rat{3, 1}, Rat{2, 1}, 1);
    CHECK(!bad.ok);
    REQUIRE(bad.bad_window.has_value());
    CHECK(bad.bad_window->first <= bad.bad_window->second);
}
