#pragma once

#include <cstdint>

#include "coarse/metric_space.hpp"

namespace coarse {
namespace gen {

Graph path(int n);
Graph cycle(int n);

// rows x cols square grid, vertex (r, c) -> r * cols + c.
Graph grid(int rows, int cols);

// King-move grid (adds diagonals); 2 x n strips are Helly.
Graph king(int rows, int cols);

// Uniform random labeled tree via a seeded Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Star with `arms` rays, each subdivided into `seg` edges. Vertex 0 is the hub.
Graph star_subdiv(int arms, int seg);

// Spine 0..spine-1 plus `legs` leaf vertices attached round-robin to interior
// spine vertices.
Graph caterpillar(int spine, int legs);

}  // namespace gen
}  // namespace coarse
