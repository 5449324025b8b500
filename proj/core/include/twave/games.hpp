#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twave/nimber.hpp"
#include "twave/normalize.hpp"
#include "twave/rulesets.hpp"

namespace twave {

// What the solver needs from a ruleset.
template <class G>
concept GameRules = requires(const G& game, const typename G::Position& p) {
  typename G::Move;
  { G::id } -> std::convertible_to<std::string_view>;
  { game.options(p) } -> std::same_as<std::vector<Option<typename G::Move, typename G::Position>>>;
  { game.normalize(p) } -> std::convertible_to<typename G::Position>;
  { game.key(p) } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename G::Move>;

struct TransverseWave {
  using Position = Grid;
  using Move = ColumnMove;
  static constexpr std::string_view id = "transverse_wave";

  // Strip all-green columns into a *1 summand each. Off unless asked for.
  bool extract_green_columns = false;

  auto options(const Grid& g) const { return tw_options(g); }
  Grid normalize(const Grid& g) const { return twave::normalize(g); }
  std::string key(const Grid& g) const { return memo_key(g); }
  std::pair<Grid, Nimber> split(const Grid& g) const;
};

struct CrosswiseAnd {
  using Position = BooleanMatrix;
  using Move = ColumnMove;
  static constexpr std::string_view id = "crosswise_and";

  auto options(const BooleanMatrix& b) const { return cw_and_options(b); }
  BooleanMatrix normalize(const BooleanMatrix& b) const { return normalize_and(b); }
  std::string key(const BooleanMatrix& b) const { return memo_key(b); }
};

struct CrosswiseOr {
  using Position = BooleanMatrix;
  using Move = ColumnMove;
  static constexpr std::string_view id = "crosswise_or";

  auto options(const BooleanMatrix& b) const { return cw_or_options(b); }
  BooleanMatrix normalize(const BooleanMatrix& b) const { return normalize_or(b); }
  std::string key(const BooleanMatrix& b) const { return memo_key(b); }
};

// Same tree as Crosswise AND, so the AND normalizer applies.
struct DemiQuantumBooleanNim {
  using Position = BooleanMatrix;
  using Move = ColumnMove;
  static constexpr std::string_view id = "demi_quantum_boolean_nim";

  auto options(const BooleanMatrix& b) const { return dqbn_options(b); }
  BooleanMatrix normalize(const BooleanMatrix& b) const { return normalize_and(b); }
  std::string key(const BooleanMatrix& b) const { return memo_key(b); }
};

struct Nim {
  using Position = NimPosition;
  using Move = NimMove;
  static constexpr std::string_view id = "nim";

  auto options(const NimPosition& p) const { return nim_options(p); }
  NimPosition normalize(const NimPosition& p) const { return p; }
  std::string key(const NimPosition& p) const { return memo_key(p); }
};

struct DemiQuantumNim {
  using Position = Superposition;
  using Move = NimMove;
  static constexpr std::string_view id = "demi_quantum_nim";
  static constexpr bool label_stable = true;

  auto options(const Superposition& s) const { return dqnim_options(s); }
  Superposition normalize(const Superposition& s) const { return twave::normalize(s); }
  std::string key(const Superposition& s) const { return memo_key(s); }
};

struct AvoidTrue {
  using Position = CnfPosition;
  using Move = VariableMove;
  static constexpr std::string_view id = "avoid_true";

  auto options(const CnfPosition& c) const { return avoid_true_options(c); }
  CnfPosition normalize(const CnfPosition& c) const { return c; }
  std::string key(const CnfPosition& c) const { return memo_key(c); }
};

struct NodeKayles {
  using Position = UndirectedGraph;
  using Move = VertexMove;
  static constexpr std::string_view id = "node_kayles";

  auto options(const UndirectedGraph& g) const { return node_kayles_options(g); }
  UndirectedGraph normalize(const UndirectedGraph& g) const { return g; }
  std::string key(const UndirectedGraph& g) const { return memo_key(g); }
};

struct FriendCircle {
  using Position = FriendCirclePosition;
  using Move = VertexMove;
  static constexpr std::string_view id = "friend_circle";

  auto options(const FriendCirclePosition& p) const { return friend_circle_options(p); }
  FriendCirclePosition normalize(const FriendCirclePosition& p) const { return p; }
  std::string key(const FriendCirclePosition& p) const { return memo_key(p); }
};

struct DemographicInfluence {
  using Position = InfluenceNetwork;
  using Move = DemographicMove;
  static constexpr std::string_view id = "demographic_influence";
  static constexpr bool label_stable = true;

  auto options(const InfluenceNetwork& z) const { return demographic_options(z); }
  InfluenceNetwork normalize(const InfluenceNetwork& z) const { return twave::normalize(z); }
  std::string key(const InfluenceNetwork& z) const { return memo_key(z); }
};

struct HypergraphNim {
  using Position = HypergraphNimPosition;
  using Move = VertexMove;
  static constexpr std::string_view id = "hypergraph_nim";

  auto options(const HypergraphNimPosition& h) const { return hypergraph_nim_options(h); }
  HypergraphNimPosition normalize(const HypergraphNimPosition& h) const { return h; }
  std::string key(const HypergraphNimPosition& h) const { return memo_key(h); }
};

}  // namespace twave
