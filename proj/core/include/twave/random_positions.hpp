#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twave/grid.hpp"
#include "twave/positions.hpp"

namespace twave {

using Rng = std::mt19937_64;

Grid random_grid(Rng& rng, std::size_t rows, std::size_t cols);
BooleanMatrix random_boolean_matrix(Rng& rng, std::size_t rows, std::size_t cols);
// 1..max_rows realizations of 1..max_cols heaps, each in 0..max_heap.
Superposition random_superposition(Rng& rng, std::size_t max_rows, std::size_t max_cols, std::uint32_t max_heap);
// 1..max_clauses non-empty clauses over 1..max_vars variables; T is empty.
CnfPosition random_cnf(Rng& rng, std::size_t max_clauses, std::uint32_t max_vars);
UndirectedGraph random_graph(Rng& rng, std::size_t vertices, double edge_probability = 0.5);
// Random graph on 1..max_vertices vertices, random seeds and weights.
FriendCirclePosition random_friend_circle(Rng& rng, std::size_t max_vertices);
// Complete bipartite between 1..max_left seeds and 1..max_right others.
FriendCirclePosition random_bipartite_friend_circle(Rng& rng, std::size_t max_left, std::size_t max_right);

// Every grid of the given shape (2^(rows*cols) of them).
std::vector<Grid> all_grids(std::size_t rows, std::size_t cols);
// Every labelled graph on n vertices.
std::vector<UndirectedGraph> all_graphs(std::size_t n);

}  // namespace twave
