#include "twave/rulesets.hpp"

#include <algorithm>
#include <bit>

namespace twave {

namespace {

template <class F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

}  // namespace

std::string render(const ColumnMove& m) { return std::to_string(m.column); }

std::string render(const NimMove& m) {
  std::string out = "(";
  for (std::uint32_t i = 0; i < m.width; ++i) {
    if (i) out += ',';
    out += i == m.heap ? "-" + std::to_string(m.amount) : "0";
  }
  return out + ")";
}

std::string render(const VariableMove& m) { return "x" + std::to_string(m.variable + 1); }

std::string render(const VertexMove& m) { return std::to_string(m.vertex); }

std::string render(const DemographicMove& m) {
  return "(" + std::to_string(m.demographic) + "," + std::to_string(m.amount) + ")";
}

std::vector<Option<ColumnMove, Grid>> tw_options(const Grid& g) {
  std::vector<Option<ColumnMove, Grid>> out;
  const auto full = g.full_mask();
  const auto& purple = g.purple().masks();
  for_each_bit(g.columns_with_green(), [&](std::uint32_t j) {
    const std::uint64_t bit = 1ULL << j;
    std::vector<std::uint64_t> next(purple.size());
    for (std::size_t i = 0; i < purple.size(); ++i) {
      // The wave: a row already purple at j turns entirely purple.
      next[i] = (purple[i] & bit) ? full : (purple[i] | bit);
    }
    out.push_back({ColumnMove{j}, Grid{BitRows{std::move(next), g.cols()}}});
  });
  return out;
}

std::vector<Option<ColumnMove, BooleanMatrix>> cw_and_options(const BooleanMatrix& b) {
  std::vector<Option<ColumnMove, BooleanMatrix>> out;
  const auto& rows = b.bits().masks();
  for_each_bit(b.bits().any_mask(), [&](std::uint32_t j) {
    const std::uint64_t bit = 1ULL << j;
    std::vector<std::uint64_t> next(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      next[i] = (rows[i] & bit) ? (rows[i] & ~bit) : 0;
    }
    out.push_back({ColumnMove{j}, BooleanMatrix{BitRows{std::move(next), b.cols()}}});
  });
  return out;
}

std::vector<Option<ColumnMove, BooleanMatrix>> cw_or_options(const BooleanMatrix& b) {
  std::vector<Option<ColumnMove, BooleanMatrix>> out;
  const auto full = b.full_mask();
  const auto& rows = b.bits().masks();
  for_each_bit(~b.bits().all_mask() & full, [&](std::uint32_t j) {
    const std::uint64_t bit = 1ULL << j;
    std::vector<std::uint64_t> next(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      next[i] = (rows[i] & bit) ? full : (rows[i] | bit);
    }
    out.push_back({ColumnMove{j}, BooleanMatrix{BitRows{std::move(next), b.cols()}}});
  });
  return out;
}

std::vector<Option<ColumnMove, BooleanMatrix>> dqbn_options(const BooleanMatrix& b) {
  std::vector<Option<ColumnMove, BooleanMatrix>> out;
  const auto& rows = b.bits().masks();
  for_each_bit(b.bits().any_mask(), [&](std::uint32_t j) {
    const std::uint64_t bit = 1ULL << j;
    std::vector<std::uint64_t> next;
    for (auto r : rows) {
      if (r & bit) next.push_back(r & ~bit);
    }
    out.push_back({ColumnMove{j}, BooleanMatrix{BitRows{std::move(next), b.cols()}}});
  });
  return out;
}

std::vector<Option<NimMove, NimPosition>> nim_options(const NimPosition& p) {
  std::vector<Option<NimMove, NimPosition>> out;
  const auto width = static_cast<std::uint32_t>(p.heaps.size());
  for (std::uint32_t i = 0; i < width; ++i) {
    for (std::uint32_t q = 1; q <= p.heaps[i]; ++q) {
      NimPosition next = p;
      next.heaps[i] -= q;
      out.push_back({NimMove{i, q, width}, std::move(next)});
    }
  }
  return out;
}

std::vector<Option<NimMove, Superposition>> dqnim_options(const Superposition& s) {
  std::vector<Option<NimMove, Superposition>> out;
  const auto width = static_cast<std::uint32_t>(s.heap_count());
  for (std::uint32_t i = 0; i < width; ++i) {
    std::uint32_t tallest = 0;
    for (const auto& r : s.realizations()) tallest = std::max(tallest, r.heaps[i]);
    for (std::uint32_t q = 1; q <= tallest; ++q) {
      std::vector<NimPosition> survivors;
      for (const auto& r : s.realizations()) {
        if (r.heaps[i] < q) continue;  // collapses
        NimPosition next = r;
        next.heaps[i] -= q;
        survivors.push_back(std::move(next));
      }
      out.push_back({NimMove{i, q, width}, Superposition{std::move(survivors)}});
    }
  }
  return out;
}

std::vector<Option<VariableMove, CnfPosition>> avoid_true_options(const CnfPosition& c) {
  std::vector<Option<VariableMove, CnfPosition>> out;
  for_each_bit(c.variables_mask() & ~c.true_set, [&](std::uint32_t x) {
    const std::uint64_t chosen = c.true_set | (1ULL << x);
    const bool some_clause_false =
        std::any_of(c.clauses.begin(), c.clauses.end(), [&](std::uint64_t clause) { return (clause & chosen) == 0; });
    if (!some_clause_false) return;
    CnfPosition next = c;
    next.true_set = chosen;
    out.push_back({VariableMove{x}, std::move(next)});
  });
  return out;
}

std::vector<Option<VertexMove, UndirectedGraph>> node_kayles_options(const UndirectedGraph& g) {
  std::vector<Option<VertexMove, UndirectedGraph>> out;
  for_each_bit(g.vertices(), [&](std::uint32_t v) {
    UndirectedGraph next = g;
    next.remove_vertices(g.neighbors(v) | (1ULL << v));
    out.push_back({VertexMove{v}, std::move(next)});
  });
  return out;
}

std::vector<Option<VertexMove, FriendCirclePosition>> friend_circle_options(const FriendCirclePosition& p) {
  std::vector<Option<VertexMove, FriendCirclePosition>> out;
  for_each_bit(p.seeds, [&](std::uint32_t v) {
    if (p.false_neighbors(v) == 0) return;
    FriendCirclePosition next = p;
    const std::uint64_t around_v = p.graph.neighbors(v);
    for_each_bit(around_v, [&](std::uint32_t x) { next.set_weight(v, x, true); });
    // Cascade is decided on the pre-move weights and goes one level deep.
    for_each_bit(around_v & p.true_adjacency[v], [&](std::uint32_t x) {
      for_each_bit(p.graph.neighbors(x), [&](std::uint32_t y) { next.set_weight(x, y, true); });
    });
    out.push_back({VertexMove{v}, std::move(next)});
  });
  return out;
}

std::vector<Option<DemographicMove, InfluenceNetwork>> demographic_options(const InfluenceNetwork& z) {
  std::vector<Option<DemographicMove, InfluenceNetwork>> out;
  for (std::uint32_t k = 0; k < z.demographics.size(); ++k) {
    const std::uint64_t members = z.demographics[k];
    std::int64_t highest = 0;
    for_each_bit(members, [&](std::uint32_t v) { highest = std::max(highest, z.theta[v]); });
    for (std::int64_t c = 1; c <= highest; ++c) {
      InfluenceNetwork next = z;
      std::uint64_t newly_strong = 0;
      for_each_bit(members, [&](std::uint32_t v) {
        const std::int64_t before = next.theta[v];
        next.theta[v] = before - c;
        if (before >= 0 && next.theta[v] < 0) newly_strong |= 1ULL << v;
      });
      // Every subtraction happens before any endorsement spreads.
      for_each_bit(newly_strong, [&](std::uint32_t v) {
        for_each_bit(z.graph.neighbors(v), [&](std::uint32_t x) { next.theta[x] = -1; });
      });
      out.push_back({DemographicMove{k, c}, std::move(next)});
    }
  }
  return out;
}

std::vector<Option<VertexMove, HypergraphNimPosition>> hypergraph_nim_options(const HypergraphNimPosition& h) {
  std::vector<Option<VertexMove, HypergraphNimPosition>> out;
  std::uint64_t reachable = 0;
  const std::uint64_t here = 1ULL << h.current;
  for (auto e : h.hyperedges) {
    if (e & here) reachable |= e;
  }
  for_each_bit(reachable & h.pebbles, [&](std::uint32_t v) {
    const std::uint64_t bit = 1ULL << v;
    HypergraphNimPosition next;
    next.vertex_count = h.vertex_count;
    next.pebbles = h.pebbles & ~bit;
    next.current = v;
    for (auto e : h.hyperedges) {
      if (e & bit) next.hyperedges.push_back(e);
    }
    out.push_back({VertexMove{v}, std::move(next)});
  });
  return out;
}

}  // namespace twave
