#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "twave/grid.hpp"
#include "twave/positions.hpp"

namespace twave {

// A move together with the position it leads to.
template <class Move, class Position>
struct Option {
  Move move;
  Position position;
};

// Moves carry stable renderings; the natural order of each move type is the
// tie-break order used by the solver.

// Column selection (Transverse Wave, Crosswise AND/OR, Demi-Quantum Boolean Nim).
struct ColumnMove {
  std::uint32_t column = 0;
  auto operator<=>(const ColumnMove&) const = default;
};

// Remove `amount` pebbles from `heap`; `width` is the heap count, kept for the
// vector rendering "(0,-2,0)".
struct NimMove {
  std::uint32_t heap = 0;
  std::uint32_t amount = 0;
  std::uint32_t width = 0;
  auto operator<=>(const NimMove&) const = default;
};

// Avoid True variable selection; 0-based internally, rendered "x1".."xn".
struct VariableMove {
  std::uint32_t variable = 0;
  auto operator<=>(const VariableMove&) const = default;
};

struct VertexMove {
  std::uint32_t vertex = 0;
  auto operator<=>(const VertexMove&) const = default;
};

// Influence demographic `demographic` by `amount`.
struct DemographicMove {
  std::uint32_t demographic = 0;
  std::int64_t amount = 0;
  auto operator<=>(const DemographicMove&) const = default;
};

std::string render(const ColumnMove& m);
std::string render(const NimMove& m);
std::string render(const VariableMove& m);
std::string render(const VertexMove& m);
std::string render(const DemographicMove& m);

std::vector<Option<ColumnMove, Grid>> tw_options(const Grid& g);
std::vector<Option<ColumnMove, BooleanMatrix>> cw_and_options(const BooleanMatrix& b);
std::vector<Option<ColumnMove, BooleanMatrix>> cw_or_options(const BooleanMatrix& b);

// Demi-Quantum Boolean Nim read directly off a 0/1 matrix (rows are
// realizations, columns heaps). Taking the pebble of heap j drops every row
// with a 0 there. A matrix without rows is terminal.
std::vector<Option<ColumnMove, BooleanMatrix>> dqbn_options(const BooleanMatrix& b);

std::vector<Option<NimMove, NimPosition>> nim_options(const NimPosition& p);
std::vector<Option<NimMove, Superposition>> dqnim_options(const Superposition& s);

std::vector<Option<VariableMove, CnfPosition>> avoid_true_options(const CnfPosition& c);

std::vector<Option<VertexMove, UndirectedGraph>> node_kayles_options(const UndirectedGraph& g);
std::vector<Option<VertexMove, FriendCirclePosition>> friend_circle_options(const FriendCirclePosition& p);
std::vector<Option<DemographicMove, InfluenceNetwork>> demographic_options(const InfluenceNetwork& z);
std::vector<Option<VertexMove, HypergraphNimPosition>> hypergraph_nim_options(const HypergraphNimPosition& h);

}  // namespace twave
