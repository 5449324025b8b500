#include "twave/random_positions.hpp"

#include "twave/error.hpp"

namespace twave {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::uint64_t random_mask(Rng& rng, std::size_t bits) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < bits; ++j) {
    if (coin(rng)) m |= 1ULL << j;
  }
  return m;
}

}  // namespace

Grid random_grid(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < rows; ++i) masks.push_back(random_mask(rng, cols));
  return Grid{BitRows{std::move(masks), cols}};
}

BooleanMatrix random_boolean_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  return BooleanMatrix{random_grid(rng, rows, cols).purple()};
}

Superposition random_superposition(Rng& rng, std::size_t max_rows, std::size_t max_cols, std::uint32_t max_heap) {
  const auto rows = pick(rng, 1, max_rows);
  const auto cols = pick(rng, 1, max_cols);
  std::vector<NimPosition> rs(rows);
  for (auto& r : rs) {
    for (std::size_t j = 0; j < cols; ++j) r.heaps.push_back(static_cast<std::uint32_t>(pick(rng, 0, max_heap)));
  }
  return Superposition{std::move(rs)};
}

CnfPosition random_cnf(Rng& rng, std::size_t max_clauses, std::uint32_t max_vars) {
  CnfPosition c;
  c.var_count = static_cast<std::uint32_t>(pick(rng, 1, max_vars));
  const auto clauses = pick(rng, 1, max_clauses);
  for (std::size_t i = 0; i < clauses; ++i) {
    std::uint64_t clause = 0;
    while (clause == 0) clause = random_mask(rng, c.var_count);
    c.clauses.push_back(clause);
  }
  return c;
}

UndirectedGraph random_graph(Rng& rng, std::size_t vertices, double edge_probability) {
  UndirectedGraph g(vertices);
  for (std::uint32_t u = 0; u < vertices; ++u) {
    for (std::uint32_t v = u + 1; v < vertices; ++v) {
      if (coin(rng, edge_probability)) g.add_edge(u, v);
    }
  }
  return g;
}

FriendCirclePosition random_friend_circle(Rng& rng, std::size_t max_vertices) {
  const auto n = pick(rng, 1, max_vertices);
  FriendCirclePosition p(random_graph(rng, n), random_mask(rng, n));
  for (auto [u, v] : p.graph.edges()) p.set_weight(u, v, coin(rng, 0.3));
  return p;
}

FriendCirclePosition random_bipartite_friend_circle(Rng& rng, std::size_t max_left, std::size_t max_right) {
  const auto left = pick(rng, 1, max_left);
  const auto right = pick(rng, 1, max_right);
  UndirectedGraph g(left + right);
  for (std::uint32_t u = 0; u < left; ++u) {
    for (std::uint32_t v = 0; v < right; ++v) g.add_edge(u, static_cast<std::uint32_t>(left + v));
  }
  FriendCirclePosition p(g, (1ULL << left) - 1);
  for (auto [u, v] : p.graph.edges()) p.set_weight(u, v, coin(rng, 0.4));
  return p;
}

std::vector<Grid> all_grids(std::size_t rows, std::size_t cols) {
  const std::size_t cells = rows * cols;
  if (cells > 24) throw InvalidArgument("all_grids: at most 24 cells");
  std::vector<Grid> out;
  out.reserve(1ULL << cells);
  const std::uint64_t row_mask = cols == 64 ? ~0ULL : ((1ULL << cols) - 1);
  for (std::uint64_t code = 0; code < (1ULL << cells); ++code) {
    std::vector<std::uint64_t> masks;
    for (std::size_t i = 0; i < rows; ++i) masks.push_back((code >> (i * cols)) & row_mask);
    out.emplace_back(BitRows{std::move(masks), cols});
  }
  return out;
}

std::vector<UndirectedGraph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  if (slots.size() > 24) throw InvalidArgument("all_graphs: at most 7 vertices");
  std::vector<UndirectedGraph> out;
  for (std::uint64_t code = 0; code < (1ULL << slots.size()); ++code) {
    UndirectedGraph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((code >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace twave
