#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coarse/generators.hpp"
#include "coarse/metric_space.hpp"
#include "coarse/paths.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

Graph random_connected_graph(int n, std::mt19937_64& rng) {
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2) edges.emplace_back(u, v);
            }
        }
        auto g = Graph::make(n, std::move(edges));
        if (g.is_connected()) return g;
    }
}

}  // namespace

TEST_CASE("metric validation accepts a valid matrix") {
    auto X = FiniteMetricSpace::validate({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    CHECK(X.n() == 3);
    CHECK(X.d(0, 2) == 2);
    CHECK(X.diameter() == 2);
    CHECK(X.eccentricity(1) == 1);
}

TEST_CASE("metric validation rejects each axiom violation with a witness") {
    try {
        FiniteMetricSpace::validate({{0, 1}, {2, 0}});
        CHECK(false);
    } catch (const MetricError& e) {
        CHECK(e.witness.kind == "AsymmetricEntry");
    }
    try {
        FiniteMetricSpace::validate({{0, -1}, {-1, 0}});
        CHECK(false);
    } catch (const MetricError& e) {
        CHECK(e.witness.kind == "NegativeEntry");
    }
    try {
        FiniteMetricSpace::validate({{0, 0}, {0, 0}});
        CHECK(false);
    } catch (const MetricError& e) {
        CHECK(e.witness.kind == "ZeroOffDiagonal");
    }
    try {
        FiniteMetricSpace::validate({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
        CHECK(false);
    } catch (const MetricError& e) {
        CHECK(e.witness.kind == "TriangleViolation");
        CHECK(e.witness.indices.size() == 3);
    }
}

TEST_CASE("graph metric matches Floyd-Warshall on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        auto g = random_connected_graph(n, rng);
        auto X = graph_metric(g);
        auto fw = oracle::floyd_warshall(g);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) CHECK(X.d(i, j) == fw[i][j]);
        }
    }
}

TEST_CASE("graph metric matches Floyd-Warshall on the generator families") {
    for (const auto& g : {gen::path(7), gen::cycle(8), gen::grid(3, 4), gen::king(2, 5),
                          gen::random_tree(9, 3), gen::star_subdiv(4, 2), gen::caterpillar(6, 3)}) {
        auto X = graph_metric(g);
        auto fw = oracle::floyd_warshall(g);
        for (int i = 0; i < g.n; ++i) {
            for (int j = 0; j < g.n; ++j) CHECK(X.d(i, j) == fw[i][j]);
        }
    }
}

TEST_CASE("disconnected graphs are rejected with a component witness") {
    auto g = Graph::make(4, {{0, 1}, {2, 3}});
    try {
        graph_metric(g);
        CHECK(false);
    } catch (const MetricError& e) {
        CHECK(e.witness.kind == "Disconnected");
        CHECK(!e.witness.indices.empty());
    }
}

TEST_CASE("ball members are exactly the closed ball") {
    auto X = graph_metric(gen::cycle(8));
    auto ball = X.ball_members({0, 2});
    CHECK(ball.members == std::vector<int>{0, 1, 2, 6, 7});
    CHECK(X.ball_members({3, 0}).members == std::vector<int>{3});
}

TEST_CASE("scaled metrics: integrality check") {
    auto X = FiniteMetricSpace::validate({{0, 2, 4}, {2, 0, 2}, {4, 2, 0}}, 2);
    CHECK(X.is_integer_metric());
    auto Y = FiniteMetricSpace::validate({{0, 3, 4}, {3, 0, 2}, {4, 2, 0}}, 2);
    CHECK(!Y.is_integer_metric());
}

TEST_CASE("quasi-geodesic check reports the first violating pair") {
    auto X = graph_metric(gen::path(6));
    // 0,1,0,1 violates (0,2) at lambda=1.
    DiscretePath p{{0, 1, 0, 1}, Rat{1, 1}, Rat{0, 1}};
    auto res = is_quasi_geodesic(X, p);
    CHECK(!res.ok);
    CHECK(*res.violation == std::pair<int, int>{0, 2});
    DiscretePath q{{0, 1, 2, 3}, Rat{1, 1}, Rat{0, 1}};
    CHECK(is_quasi_geodesic(X, q).ok);
    DiscretePath far{{0, 2}, Rat{1, 1}, Rat{0, 1}};
    CHECK(!is_quasi_geodesic(X, far).ok);  // step of length 2
}

TEST_CASE("quasi-geodesic enumeration matches the brute-force filter") {
    std::vector<std::pair<Rat, Rat>> params = {
        {Rat{1, 1}, Rat{0, 1}}, {Rat{2, 1}, Rat{0, 1}}, {Rat{3, 2}, Rat{1, 1}}};
    for (const auto& g : {gen::path(4), gen::cycle(5), gen::cycle(6), gen::king(2, 3)}) {
        auto X = graph_metric(g);
        for (const auto& [lambda, eps] : params) {
            for (int x = 0; x < X.n(); ++x) {
                for (int y = 0; y < X.n(); ++y) {
                    if (x == y) continue;
                    auto got = enumerate_quasi_geodesics(X, x, y, lambda, eps, 2'000'000);
                    REQUIRE(got.complete);
                    auto want = oracle::brute_quasi_geodesics(X, x, y, lambda, eps);
                    std::sort(want.begin(), want.end());
                    REQUIRE(got.paths.size() == want.size());
                    for (std::size_t i = 0; i < want.size(); ++i) {
                        CHECK(got.paths[i].points == want[i]);
                    }
                }
            }
        }
    }
}

TEST_CASE("quasi-geodesic enumeration order is lexicographic") {
    auto X = graph_metric(gen::cycle(6));
    auto res = enumerate_quasi_geodesics(X, 0, 3, Rat{1, 1}, Rat{0, 1}, 1000);
    REQUIRE(res.paths.size() == 2);
    CHECK(res.paths[0].points == std::vector<int>{0, 1, 2, 3});
    CHECK(res.paths[1].points == std::vector<int>{0, 5, 4, 3});
}

TEST_CASE("budget exhaustion is reported, never silent") {
    auto X = graph_metric(gen::grid(4, 4));
    auto full = enumerate_geodesics(X, 0, 15, 1'000'000);
    REQUIRE(full.complete);
    CHECK(full.paths.size() == 20);  // C(6,3)
    auto cut = enumerate_geodesics(X, 0, 15, 10);
    CHECK(!cut.complete);
    CHECK(cut.paths.size() < full.paths.size());
    // Prefix property: the truncated run emits a prefix of the full ordering.
    for (std::size_t i = 0; i < cut.paths.size(); ++i) {
        CHECK(cut.paths[i].points == full.paths[i].points);
    }
}

TEST_CASE("degenerate endpoints are rejected") {
    auto X = graph_metric(gen::path(3));
    CHECK_THROWS_AS(enumerate_quasi_geodesics(X, 1, 1, Rat{1, 1}, Rat{0, 1}, 10), MetricError);
}

TEST_CASE("geodesic enumeration agrees with (1,0) quasi-geodesics") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_connected_graph(6, rng);
        auto X = graph_metric(g);
        for (int x = 0; x < X.n(); ++x) {
            for (int y = 0; y < X.n(); ++y) {
                if (x == y) continue;
                auto geo = enumerate_geodesics(X, x, y, 1'000'000);
                auto qg = enumerate_quasi_geodesics(X, x, y, Rat{1, 1}, Rat{0, 1}, 1'000'000);
                REQUIRE(geo.paths.size() == qg.paths.size());
                for (std::size_t i = 0; i < geo.paths.size(); ++i) {
                    CHECK(geo.paths[i].points == qg.paths[i].points);
                }
                CHECK(count_geodesics(X, x, y) == geo.paths.size());
                CHECK(first_geodesic(X, x, y) == geo.paths.front().points);
            }
        }
    }
}

TEST_CASE("generators produce the expected shapes") {
    CHECK(gen::path(5).edges.size() == 4);
    CHECK(gen::cycle(5).edges.size() == 5);
    CHECK(gen::grid(3, 4).n == 12);
    CHECK(gen::grid(3, 4).edges.size() == 17);
    CHECK(gen::king(2, 4).edges.size() == 16);
    auto t = gen::random_tree(10, 99);
    CHECK(t.edges.size() == 9);
    CHECK(t.is_connected());
    CHECK(gen::random_tree(10, 99).edges == t.edges);  // seed-deterministic
    CHECK(gen::random_tree(10, 100).edges != t.edges);
    auto s = gen::star_subdiv(3, 2);
    CHECK(s.n == 7);
    auto Xs = graph_metric(s);
    CHECK(Xs.d(2, 4) == 4);
    auto c = gen::caterpillar(5, 3);
    CHECK(c.n == 8);
    CHECK(c.edges.size() == 7);
    CHECK_THROWS_AS(gen::path(0), MetricError);
    CHECK_THROWS_AS(gen::cycle(2), MetricError);
}
