#include "twave/reductions.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "twave/error.hpp"
#include "twave/verify.hpp"

namespace twave {

namespace {

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

template <class F>
void each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

std::uint32_t rank_in(std::uint64_t mask, std::uint32_t v) {
  return static_cast<std::uint32_t>(std::popcount(mask & low_bits(v)));
}

}  // namespace

BooleanMatrix grid_to_and(const Grid& g) { return BooleanMatrix{g.purple().complement()}; }

Grid and_to_grid(const BooleanMatrix& b) { return Grid{b.bits().complement()}; }

BooleanMatrix grid_to_or(const Grid& g) { return BooleanMatrix{g.purple()}; }

CnfPosition dqbn_to_avoid_true(const BooleanMatrix& b) {
  CnfPosition c;
  c.var_count = static_cast<std::uint32_t>(b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) c.clauses.push_back(~b.row(i) & b.full_mask());
  return c;
}

BooleanMatrix avoid_true_to_dqbn(const CnfPosition& c) {
  c.validate();
  const auto all = c.variables_mask();
  std::vector<std::uint64_t> rows;
  for (auto clause : c.clauses) {
    if (clause & c.true_set) continue;
    rows.push_back(all & ~clause & ~c.true_set);
  }
  return BooleanMatrix{BitRows{std::move(rows), c.var_count}};
}

Superposition dqbn_to_dqnim(const BooleanMatrix& b) {
  std::vector<NimPosition> rs;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    NimPosition p;
    for (std::size_t j = 0; j < b.cols(); ++j) p.heaps.push_back(b.at(i, j) ? 1 : 0);
    rs.push_back(std::move(p));
  }
  if (rs.empty()) rs.push_back(NimPosition{std::vector<std::uint32_t>(b.cols(), 0)});
  return Superposition{std::move(rs)};
}

Superposition nim_to_dqnim(const NimPosition& p) { return Superposition{std::vector<NimPosition>{p}}; }

FriendCirclePosition node_kayles_to_friend_circle(const UndirectedGraph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  if (2 * n > UndirectedGraph::kMaxVertices) throw InapplicableTransformer("node_kayles_to_friend_circle: at most 32 vertices");
  UndirectedGraph h(2 * n);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  each_bit(g.vertices(), [&](std::uint32_t v) { h.add_edge(v, n + v); });
  FriendCirclePosition p(h, g.vertices());
  for (auto [u, v] : g.edges()) p.set_weight(u, v, true);
  return p;
}

BooleanMatrix bipartite_fc_to_or(const FriendCirclePosition& p) {
  const auto& g = p.graph;
  const std::uint64_t left = p.seeds;
  const std::uint64_t right = g.vertices() & ~left;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.contains(v)) continue;
    const std::uint64_t expected = ((left >> v) & 1U) ? right : left;
    if (g.neighbors(v) != expected) {
      throw InapplicableTransformer("bipartite_fc_to_or: graph is not complete bipartite between the seeds and the rest");
    }
  }
  const auto cols = static_cast<std::size_t>(std::popcount(left));
  std::vector<std::uint64_t> rows;
  each_bit(right, [&](std::uint32_t x) {
    std::uint64_t row = 0;
    each_bit(left, [&](std::uint32_t v) {
      if (p.is_true(v, x)) row |= 1ULL << rank_in(left, v);
    });
    rows.push_back(row);
  });
  return BooleanMatrix{BitRows{std::move(rows), cols}};
}

InfluenceNetwork dqnim_to_demographic(const Superposition& s) {
  const auto m = s.realization_count();
  const auto n = s.heap_count();
  if (m * n > UndirectedGraph::kMaxVertices) throw InapplicableTransformer("dqnim_to_demographic: at most 64 cells");
  InfluenceNetwork z;
  z.graph = UndirectedGraph(m * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      z.theta.push_back(s.realizations()[r].heaps[a]);
      for (std::size_t b = a + 1; b < n; ++b) {
        z.graph.add_edge(static_cast<std::uint32_t>(r * n + a), static_cast<std::uint32_t>(r * n + b));
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::uint64_t d = 0;
    for (std::size_t r = 0; r < m; ++r) d |= 1ULL << (r * n + c);
    z.demographics.push_back(d);
  }
  return z;
}

InfluenceNetwork node_kayles_to_demographic(const UndirectedGraph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  if (2 * n > UndirectedGraph::kMaxVertices) throw InapplicableTransformer("node_kayles_to_demographic: at most 32 vertices");
  InfluenceNetwork z;
  z.graph = UndirectedGraph(2 * n);
  z.theta.assign(2 * n, -1);
  for (auto [u, v] : g.edges()) {
    z.graph.add_edge(u, v);
    z.graph.add_edge(u, n + v);
    z.graph.add_edge(v, n + u);
  }
  each_bit(g.vertices(), [&](std::uint32_t v) {
    z.graph.add_edge(v, n + v);
    z.theta[v] = 0;
    z.theta[n + v] = 1;
  });
  for (std::uint32_t v = 0; v < n; ++v) z.demographics.push_back((1ULL << v) | (1ULL << (n + v)));
  return z;
}

InfluenceNetwork friend_circle_to_demographic(const FriendCirclePosition& p) {
  const auto edges = p.graph.edges();
  if (edges.size() > UndirectedGraph::kMaxVertices) throw InapplicableTransformer("friend_circle_to_demographic: at most 64 edges");
  InfluenceNetwork z;
  z.graph = UndirectedGraph(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    z.theta.push_back(p.is_true(edges[i].first, edges[i].second) ? 0 : 1);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) z.graph.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  each_bit(p.seeds, [&](std::uint32_t s) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first == s || edges[i].second == s) d |= 1ULL << i;
    }
    z.demographics.push_back(d);
  });
  return z;
}

HypergraphNimPosition avoid_true_to_hypergraph(const CnfPosition& c) {
  c.validate();
  if (c.var_count >= 64) throw InapplicableTransformer("avoid_true_to_hypergraph: at most 63 variables");
  const auto vars = c.variables_mask();
  const std::uint64_t start = 1ULL << c.var_count;
  HypergraphNimPosition h;
  h.vertex_count = c.var_count + 1;
  h.current = c.var_count;
  h.pebbles = vars & ~c.true_set;
  for (auto clause : c.clauses) {
    if (clause & c.true_set) continue;
    h.hyperedges.push_back((vars & ~clause) | start);
  }
  return h;
}

namespace {

struct Entry {
  TransformerInfo info;
  std::function<PositionDocument(const PositionDocument&)> apply;
  std::function<std::vector<std::pair<std::string, std::string>>(const PositionDocument&)> table;
  std::function<ReductionReport(const PositionDocument&, const SolveBudget&)> verify;
};

template <class P>
const P& payload_as(const PositionDocument& doc, const TransformerInfo& info) {
  if (doc.ruleset != info.from) {
    throw InapplicableTransformer(info.name + " expects a " + std::string(ruleset_name(info.from)) + " position, got " +
                                  std::string(ruleset_name(doc.ruleset)));
  }
  const P* p = std::get_if<P>(&doc.payload);
  if (!p) throw InapplicableTransformer(info.name + ": payload type mismatch");
  return *p;
}

// `bijection(root)` returns the move map valid throughout the game from root.
template <GameRules S, GameRules T, class Convert, class Bijection>
Entry make_entry(std::string name, RulesetId from, RulesetId to, Convert convert, Bijection bijection) {
  Entry e;
  e.info = TransformerInfo{std::move(name), from, to};
  const TransformerInfo info = e.info;
  e.apply = [=](const PositionDocument& doc) {
    const auto& p = payload_as<typename S::Position>(doc, info);
    return make_document(info.to, convert(p));
  };
  e.table = [=](const PositionDocument& doc) {
    const auto& p = payload_as<typename S::Position>(doc, info);
    auto map = bijection(p);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& o : S{}.options(p)) out.emplace_back(render(o.move), render(map(o.move)));
    return out;
  };
  e.verify = [=](const PositionDocument& doc, const SolveBudget& budget) {
    const auto& p = payload_as<typename S::Position>(doc, info);
    const auto image = convert(p);
    ReductionReport r;
    r.transformer = info.name;
    Solver<S> source_solver(S{}, budget);
    Solver<T> target_solver(T{}, budget);
    r.source_grundy = source_solver.grundy(p);
    r.target_grundy = target_solver.grundy(image);
    auto walk = lockstep(S{}, p, T{}, image, bijection(p), budget.max_nodes);
    r.isomorphism_checked = true;
    r.move_bijection_depth = walk.depth;
    r.position_pairs = walk.pairs;
    r.pass = walk.ok && r.source_grundy == r.target_grundy;
    if (!walk.ok) {
      r.detail = walk.detail;
      r.counterexample = serialize_position(make_document(info.from, *walk.counterexample));
    } else if (!r.pass) {
      r.detail = "grundy mismatch: " + r.source_grundy.to_string() + " vs " + r.target_grundy.to_string();
      r.counterexample = serialize_position(doc);
    }
    return r;
  };
  return e;
}

template <class M>
auto same_move() {
  return [](const auto&) { return [](const M& m) { return m; }; };
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    using R = RulesetId;
    std::vector<Entry> v;
    v.push_back(make_entry<TransverseWave, CrosswiseAnd>("grid_to_and", R::TransverseWave, R::CrosswiseAnd, grid_to_and,
                                                         same_move<ColumnMove>()));
    v.push_back(make_entry<CrosswiseAnd, TransverseWave>("and_to_grid", R::CrosswiseAnd, R::TransverseWave, and_to_grid,
                                                         same_move<ColumnMove>()));
    v.push_back(make_entry<TransverseWave, CrosswiseOr>("grid_to_or", R::TransverseWave, R::CrosswiseOr, grid_to_or,
                                                        same_move<ColumnMove>()));
    v.push_back(make_entry<CrosswiseAnd, DemiQuantumBooleanNim>(
        "and_to_dqbn", R::CrosswiseAnd, R::DemiQuantumBooleanNim, [](const BooleanMatrix& b) { return b; },
        same_move<ColumnMove>()));
    v.push_back(make_entry<DemiQuantumBooleanNim, CrosswiseAnd>(
        "dqbn_to_and", R::DemiQuantumBooleanNim, R::CrosswiseAnd, [](const BooleanMatrix& b) { return b; },
        same_move<ColumnMove>()));
    v.push_back(make_entry<DemiQuantumBooleanNim, AvoidTrue>(
        "dqbn_to_avoid_true", R::DemiQuantumBooleanNim, R::AvoidTrue, dqbn_to_avoid_true,
        [](const BooleanMatrix&) { return [](const ColumnMove& m) { return VariableMove{m.column}; }; }));
    v.push_back(make_entry<AvoidTrue, DemiQuantumBooleanNim>(
        "avoid_true_to_dqbn", R::AvoidTrue, R::DemiQuantumBooleanNim, avoid_true_to_dqbn,
        [](const CnfPosition&) { return [](const VariableMove& m) { return ColumnMove{m.variable}; }; }));
    v.push_back(make_entry<DemiQuantumBooleanNim, DemiQuantumNim>(
        "dqbn_to_dqnim", R::DemiQuantumBooleanNim, R::DemiQuantumNim, dqbn_to_dqnim, [](const BooleanMatrix& b) {
          const auto width = static_cast<std::uint32_t>(b.cols());
          return [width](const ColumnMove& m) { return NimMove{m.column, 1, width}; };
        }));
    v.push_back(make_entry<Nim, DemiQuantumNim>("nim_to_dqnim", R::Nim, R::DemiQuantumNim, nim_to_dqnim,
                                                same_move<NimMove>()));
    v.push_back(make_entry<NodeKayles, FriendCircle>("node_kayles_to_friend_circle", R::NodeKayles, R::FriendCircle,
                                                     node_kayles_to_friend_circle, same_move<VertexMove>()));
    v.push_back(make_entry<FriendCircle, CrosswiseOr>(
        "bipartite_fc_to_or", R::FriendCircle, R::CrosswiseOr, bipartite_fc_to_or, [](const FriendCirclePosition& p) {
          const auto seeds = p.seeds;
          return [seeds](const VertexMove& m) { return ColumnMove{rank_in(seeds, m.vertex)}; };
        }));
    v.push_back(make_entry<DemiQuantumNim, DemographicInfluence>(
        "dqnim_to_demographic", R::DemiQuantumNim, R::DemographicInfluence, dqnim_to_demographic,
        [](const Superposition&) {
          return [](const NimMove& m) { return DemographicMove{m.heap, static_cast<std::int64_t>(m.amount)}; };
        }));
    v.push_back(make_entry<NodeKayles, DemographicInfluence>(
        "node_kayles_to_demographic", R::NodeKayles, R::DemographicInfluence, node_kayles_to_demographic,
        [](const UndirectedGraph&) { return [](const VertexMove& m) { return DemographicMove{m.vertex, 1}; }; }));
    v.push_back(make_entry<FriendCircle, DemographicInfluence>(
        "friend_circle_to_demographic", R::FriendCircle, R::DemographicInfluence, friend_circle_to_demographic,
        [](const FriendCirclePosition& p) {
          const auto seeds = p.seeds;
          return [seeds](const VertexMove& m) { return DemographicMove{rank_in(seeds, m.vertex), 1}; };
        }));
    v.push_back(make_entry<AvoidTrue, HypergraphNim>("avoid_true_to_hypergraph", R::AvoidTrue, R::HypergraphNim,
                                                     avoid_true_to_hypergraph, [](const CnfPosition&) {
                                                       return [](const VariableMove& m) { return VertexMove{m.variable}; };
                                                     }));
    return v;
  }();
  return entries;
}

const Entry& entry(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw InapplicableTransformer("unknown transformer \"" + std::string(name) + "\"");
}

}  // namespace

const std::vector<TransformerInfo>& transformers() {
  static const std::vector<TransformerInfo> infos = [] {
    std::vector<TransformerInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

PositionDocument apply_transformer(std::string_view name, const PositionDocument& source) {
  return entry(name).apply(source);
}

std::vector<std::pair<std::string, std::string>> move_table(std::string_view name, const PositionDocument& source) {
  return entry(name).table(source);
}

ReductionReport verify_reduction(const PositionDocument& source, std::string_view name, const SolveBudget& budget) {
  budget.validate();
  return entry(name).verify(source, budget);
}

PositionDocument sample_source(std::string_view name, Rng& rng) {
  const auto& info = entry(name).info;
  auto dim = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(1, hi)(rng); };
  if (name == "bipartite_fc_to_or") return make_document(info.from, random_bipartite_friend_circle(rng, 4, 4));
  if (name == "dqnim_to_demographic") return make_document(info.from, random_superposition(rng, 3, 4, 3));
  switch (info.from) {
    case RulesetId::TransverseWave: return make_document(info.from, random_grid(rng, dim(3), dim(3)));
    case RulesetId::CrosswiseAnd:
    case RulesetId::CrosswiseOr:
    case RulesetId::DemiQuantumBooleanNim: return make_document(info.from, random_boolean_matrix(rng, dim(4), dim(4)));
    case RulesetId::Nim: {
      NimPosition p;
      for (std::size_t i = dim(3); i > 0; --i) p.heaps.push_back(static_cast<std::uint32_t>(dim(5) - 1));
      return make_document(info.from, p);
    }
    case RulesetId::DemiQuantumNim: return make_document(info.from, random_superposition(rng, 4, 4, 3));
    case RulesetId::AvoidTrue: return make_document(info.from, random_cnf(rng, 4, 5));
    case RulesetId::NodeKayles: return make_document(info.from, random_graph(rng, dim(5)));
    case RulesetId::FriendCircle: return make_document(info.from, random_friend_circle(rng, 5));
    default: break;
  }
  throw InapplicableTransformer("no sampler for " + std::string(name));
}

std::optional<std::vector<std::string>> conversion_path(RulesetId from, RulesetId to) {
  if (from == to) return std::vector<std::string>{};
  std::map<RulesetId, const Entry*> via;
  std::deque<RulesetId> queue{from};
  while (!queue.empty()) {
    const auto at = queue.front();
    queue.pop_front();
    for (const auto& e : registry()) {
      if (e.info.from != at || e.info.to == from || via.count(e.info.to)) continue;
      via[e.info.to] = &e;
      if (e.info.to == to) {
        std::vector<std::string> chain;
        for (auto r = to; r != from; r = via[r]->info.from) chain.push_back(via[r]->info.name);
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(e.info.to);
    }
  }
  return std::nullopt;
}

Conversion convert(const PositionDocument& source, RulesetId to) {
  auto chain = conversion_path(source.ruleset, to);
  if (!chain) {
    throw InapplicableTransformer("no registered transformer chain from " + std::string(ruleset_name(source.ruleset)) +
                                  " to " + std::string(ruleset_name(to)));
  }
  Conversion out{source, *chain, {}};
  bool first = true;
  for (const auto& name : *chain) {
    auto table = move_table(name, out.document);
    if (first) {
      out.moves = std::move(table);
      first = false;
    } else {
      for (auto& [src, dst] : out.moves) {
        auto it = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == dst; });
        if (it == table.end()) throw InapplicableTransformer(name + ": move " + dst + " has no image");
        dst = it->second;
      }
    }
    out.document = apply_transformer(name, out.document);
  }
  return out;
}

}  // namespace twave
