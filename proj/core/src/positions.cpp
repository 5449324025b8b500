#include "twave/positions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twave/error.hpp"

namespace twave {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

Superposition::Superposition(std::vector<NimPosition> realizations) : realizations_(std::move(realizations)) {
  if (realizations_.empty()) throw ValidationError("a superposition needs at least one realization");
  const auto width = realizations_.front().heaps.size();
  for (const auto& r : realizations_) {
    if (r.heaps.size() != width) {
      throw ValidationError("realizations must have equal heap counts (" + std::to_string(width) + " vs " +
                            std::to_string(r.heaps.size()) + ")");
    }
  }
}

Superposition::Superposition(const std::vector<std::vector<std::uint32_t>>& rows)
    : Superposition([&] {
        std::vector<NimPosition> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(NimPosition{r});
        return out;
      }()) {}

Superposition Superposition::canonical() const {
  auto rs = realizations_;
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return Superposition{std::move(rs)};
}

void CnfPosition::validate() const {
  if (var_count > 64) throw ValidationError("at most 64 variables supported");
  const auto vars = variables_mask();
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i] & ~vars) {
      throw ValidationError("clause " + std::to_string(i + 1) + " mentions a variable beyond x" +
                            std::to_string(var_count));
    }
  }
  if (true_set & ~vars) throw ValidationError("true set mentions a variable beyond x" + std::to_string(var_count));
}

UndirectedGraph::UndirectedGraph(std::size_t vertex_count) {
  if (vertex_count > kMaxVertices) {
    throw ValidationError("at most " + std::to_string(kMaxVertices) + " vertices supported");
  }
  adjacency_.assign(vertex_count, 0);
  present_ = low_mask(vertex_count);
}

UndirectedGraph::UndirectedGraph(std::size_t vertex_count,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : UndirectedGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::size_t UndirectedGraph::order() const { return static_cast<std::size_t>(std::popcount(present_)); }

void UndirectedGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
  }
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  adjacency_[u] |= 1ULL << v;
  adjacency_[v] |= 1ULL << u;
}

bool UndirectedGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  return contains(u) && contains(v) && ((adjacency_[u] >> v) & 1U);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> UndirectedGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < vertex_count(); ++u) {
    if (!contains(u)) continue;
    std::uint64_t higher = neighbors(u) & ~low_mask(u + 1);
    while (higher) {
      auto v = static_cast<std::uint32_t>(std::countr_zero(higher));
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

UndirectedGraph UndirectedGraph::compacted() const {
  std::vector<std::uint32_t> label(vertex_count(), 0);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    if (contains(v)) label[v] = next++;
  }
  UndirectedGraph out(next);
  for (auto [u, v] : edges()) out.add_edge(label[u], label[v]);
  return out;
}

bool UndirectedGraph::operator==(const UndirectedGraph& other) const {
  if (vertex_count() != other.vertex_count() || present_ != other.present_) return false;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    if (contains(v) && neighbors(v) != other.neighbors(v)) return false;
  }
  return true;
}

FriendCirclePosition::FriendCirclePosition(UndirectedGraph g, std::uint64_t seed_mask)
    : graph(std::move(g)), seeds(seed_mask), true_adjacency(graph.vertex_count(), 0) {}

void FriendCirclePosition::set_weight(std::uint32_t u, std::uint32_t v, bool value) {
  if (!graph.has_edge(u, v)) {
    throw ValidationError("weight given for non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (value) {
    true_adjacency[u] |= 1ULL << v;
    true_adjacency[v] |= 1ULL << u;
  } else {
    true_adjacency[u] &= ~(1ULL << v);
    true_adjacency[v] &= ~(1ULL << u);
  }
}

void FriendCirclePosition::validate() const {
  if (true_adjacency.size() != graph.vertex_count()) throw ValidationError("weight table size mismatch");
  if (seeds & ~graph.vertices()) throw ValidationError("seed set is not a subset of the vertices");
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    if (true_adjacency[v] & ~graph.neighbors(v)) throw ValidationError("weight on a non-edge");
  }
}

void InfluenceNetwork::validate() const {
  if (theta.size() != graph.vertex_count()) {
    throw ValidationError("theta has " + std::to_string(theta.size()) + " entries for " +
                          std::to_string(graph.vertex_count()) + " vertices");
  }
  for (std::size_t k = 0; k < demographics.size(); ++k) {
    if (demographics[k] & ~graph.vertices()) {
      throw ValidationError("demographic " + std::to_string(k) + " is not a subset of the vertices");
    }
  }
}

void HypergraphNimPosition::validate() const {
  if (vertex_count > 64) throw ValidationError("at most 64 vertices supported");
  if (vertex_count == 0) throw ValidationError("hypergraph needs at least one vertex");
  const auto all = low_mask(vertex_count);
  if (current >= vertex_count) throw ValidationError("current vertex out of range");
  if (pebbles & ~all) throw ValidationError("pebble on a vertex out of range");
  for (std::size_t i = 0; i < hyperedges.size(); ++i) {
    if (hyperedges[i] & ~all) {
      throw ValidationError("hyperedge " + std::to_string(i) + " has a vertex out of range");
    }
  }
}

}  // namespace twave
