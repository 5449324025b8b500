#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace twave {

// Classical Nim: one non-negative pile size per heap.
struct NimPosition {
  std::vector<std::uint32_t> heaps;

  auto operator<=>(const NimPosition&) const = default;
};

// Ordered, non-empty list of equally wide Nim realizations.
class Superposition {
 public:
  // Throws ValidationError when empty or ragged.
  explicit Superposition(std::vector<NimPosition> realizations);
  explicit Superposition(const std::vector<std::vector<std::uint32_t>>& rows);

  const std::vector<NimPosition>& realizations() const { return realizations_; }
  std::size_t realization_count() const { return realizations_.size(); }
  std::size_t heap_count() const { return realizations_.front().heaps.size(); }

  // Deduplicated, sorted copy. Used as the identity of quantum positions.
  Superposition canonical() const;

  auto operator<=>(const Superposition&) const = default;

 private:
  std::vector<NimPosition> realizations_;
};

// Positive CNF over variables 0..var_count-1 plus the set T of variables
// already made true. Clauses are bitmasks; an empty clause can never be
// satisfied. At most 64 variables.
struct CnfPosition {
  std::uint32_t var_count = 0;
  std::vector<std::uint64_t> clauses;
  std::uint64_t true_set = 0;

  void validate() const;
  std::uint64_t variables_mask() const { return var_count == 64 ? ~0ULL : ((1ULL << var_count) - 1); }

  auto operator<=>(const CnfPosition&) const = default;
};

// Simple undirected graph on labelled vertices 0..vertex_count-1 (at most 64).
// Vertices can be deleted while keeping their labels, so moves stay
// identifiable across positions.
class UndirectedGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t vertex_count);
  UndirectedGraph(std::size_t vertex_count, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::uint64_t vertices() const { return present_; }
  bool contains(std::uint32_t v) const { return v < vertex_count() && ((present_ >> v) & 1U); }
  std::size_t order() const;

  void add_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  // Neighbours among present vertices.
  std::uint64_t neighbors(std::uint32_t v) const { return adjacency_[v] & present_; }
  // Present edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  void remove_vertices(std::uint64_t mask) { present_ &= ~mask; }
  // Relabels the present vertices 0..order()-1 preserving their order.
  UndirectedGraph compacted() const;

  // Compares present vertices and the edges between them.
  bool operator==(const UndirectedGraph& other) const;

 private:
  std::uint64_t present_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

// Friend Circle position (G, S, w); `true_adjacency[u]` has bit v set iff the
// edge (u, v) exists and is weighted t.
struct FriendCirclePosition {
  UndirectedGraph graph;
  std::uint64_t seeds = 0;
  std::vector<std::uint64_t> true_adjacency;

  FriendCirclePosition() = default;
  // All edges start weighted f.
  FriendCirclePosition(UndirectedGraph g, std::uint64_t seed_mask);

  bool is_true(std::uint32_t u, std::uint32_t v) const { return (true_adjacency[u] >> v) & 1U; }
  void set_weight(std::uint32_t u, std::uint32_t v, bool value);
  // Neighbours of v joined by an f edge.
  std::uint64_t false_neighbors(std::uint32_t v) const { return graph.neighbors(v) & ~true_adjacency[v]; }

  void validate() const;

  bool operator==(const FriendCirclePosition&) const = default;
};

// Demographic Influence position (G, Theta, D).
struct InfluenceNetwork {
  UndirectedGraph graph;
  std::vector<std::int64_t> theta;
  std::vector<std::uint64_t> demographics;

  void validate() const;

  bool operator==(const InfluenceNetwork&) const = default;
};

// Rechargeable Hypergraph Boolean Nim: hyperedges and pebbles as vertex masks.
struct HypergraphNimPosition {
  std::uint32_t vertex_count = 0;
  std::vector<std::uint64_t> hyperedges;
  std::uint64_t pebbles = 0;
  std::uint32_t current = 0;

  void validate() const;

  auto operator<=>(const HypergraphNimPosition&) const = default;
};

}  // namespace twave
