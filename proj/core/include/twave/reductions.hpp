#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twave/io.hpp"
#include "twave/random_positions.hpp"
#include "twave/rulesets.hpp"
#include "twave/solver.hpp"

namespace twave {

BooleanMatrix grid_to_and(const Grid& g);
Grid and_to_grid(const BooleanMatrix& b);
BooleanMatrix grid_to_or(const Grid& g);

// One clause per row holding the variables at its zero entries.
CnfPosition dqbn_to_avoid_true(const BooleanMatrix& b);
// Clauses touching T are dropped; may return a matrix without rows.
BooleanMatrix avoid_true_to_dqbn(const CnfPosition& c);

// Realizations of a 0/1 superposition. A matrix without rows becomes a single
// all-zero realization.
Superposition dqbn_to_dqnim(const BooleanMatrix& b);
Superposition nim_to_dqnim(const NimPosition& p);

// Vertex v keeps its label; its pendant t_v is vertex n+v. At most 32 vertices.
FriendCirclePosition node_kayles_to_friend_circle(const UndirectedGraph& g);

// Columns are the seeds in increasing order, rows the other vertices.
// Throws InapplicableTransformer unless the graph is complete bipartite
// between the seeds and the rest.
BooleanMatrix bipartite_fc_to_or(const FriendCirclePosition& p);

// Vertex (r, c) is r*n + c; D_c is column c.
InfluenceNetwork dqnim_to_demographic(const Superposition& s);
// Vertex v keeps its label, t_v is n+v, D_v = {v, t_v}.
InfluenceNetwork node_kayles_to_demographic(const UndirectedGraph& g);
// Line graph: vertex i is the i-th edge in sorted order; one demographic per
// seed in increasing order.
InfluenceNetwork friend_circle_to_demographic(const FriendCirclePosition& p);
// Variables keep their index; the start vertex c0 is vertex var_count.
HypergraphNimPosition avoid_true_to_hypergraph(const CnfPosition& c);

struct ReductionReport {
  std::string transformer;
  Nimber source_grundy;
  Nimber target_grundy;
  bool isomorphism_checked = false;
  std::uint32_t move_bijection_depth = 0;
  std::uint64_t position_pairs = 0;
  bool pass = false;
  // Serialized source position where the check failed.
  std::optional<std::string> counterexample;
  std::string detail;
};

struct TransformerInfo {
  std::string name;
  RulesetId from;
  RulesetId to;
};

const std::vector<TransformerInfo>& transformers();

// Applies a named transformer. Throws InapplicableTransformer when the
// ruleset or position does not fit.
PositionDocument apply_transformer(std::string_view name, const PositionDocument& source);

// Image of each feasible source move at the root, as (source, target) renderings.
std::vector<std::pair<std::string, std::string>> move_table(std::string_view name, const PositionDocument& source);

ReductionReport verify_reduction(const PositionDocument& source, std::string_view name, const SolveBudget& budget = {});

// Shortest chain of transformers from one ruleset to another; empty when none
// exists or the rulesets coincide.
std::optional<std::vector<std::string>> conversion_path(RulesetId from, RulesetId to);

// Random source position of the size used for property checks of `name`.
PositionDocument sample_source(std::string_view name, Rng& rng);

struct Conversion {
  PositionDocument document;
  std::vector<std::string> chain;
  std::vector<std::pair<std::string, std::string>> moves;
};

Conversion convert(const PositionDocument& source, RulesetId to);

}  // namespace twave
