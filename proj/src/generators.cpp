#include "coarse/generators.hpp"

#include <random>

namespace coarse {
namespace gen {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw MetricError(what, Witness{"BadParams", {}, {}});
}

}  // namespace

Graph path(int n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::make(n, std::move(edges));
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::make(n, std::move(edges));
}

Graph grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1 && rows * cols >= 2, "grid needs at least two vertices");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return Graph::make(rows * cols, std::move(edges));
}

Graph king(int rows, int cols) {
    Graph g = grid(rows, cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.edges.emplace_back(id(r, c), id(r + 1, c + 1));
            if (c > 0) g.edges.emplace_back(id(r, c), id(r + 1, c - 1));
        }
    }
    return Graph::make(rows * cols, std::move(g.edges));
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 2, "tree needs n >= 2");
    if (n == 2) return path(2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (auto& p : pruefer) p = pick(rng);

    std::vector<int> degree(n, 1);
    for (int p : pruefer) ++degree[p];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(n, 0);
    for (int p : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, p);
                used[leaf] = 1;
                --degree[p];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1 && !used[v]) {
            (a < 0 ? a : b) = v;
        }
    }
    edges.emplace_back(a, b);
    return Graph::make(n, std::move(edges));
}

Graph star_subdiv(int arms, int seg) {
    require(arms >= 2 && seg >= 1, "star needs arms >= 2, seg >= 1");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int a = 0; a < arms; ++a) {
        int prev = 0;
        for (int s = 0; s < seg; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::make(next, std::move(edges));
}

Graph caterpillar(int spine, int legs) {
    require(spine >= 2 && legs >= 0, "caterpillar needs spine >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    int interior = std::max(1, spine - 2);
    for (int l = 0; l < legs; ++l) {
        int attach = spine > 2 ? 1 + (l % interior) : l % spine;
        edges.emplace_back(attach, spine + l);
    }
    return Graph::make(spine + legs, std::move(edges));
}

}  // namespace gen
}  // namespace coarse
