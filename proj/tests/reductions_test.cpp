#include <gtest/gtest.h>

#include <algorithm>

#include "twave/error.hpp"
#include "twave/reductions.hpp"
#include "twave/verify.hpp"
#include "oracle.hpp"

namespace twave {
namespace {

std::uint64_t vars(std::initializer_list<int> xs) {
  std::uint64_t m = 0;
  for (int x : xs) m |= 1ULL << (x - 1);
  return m;
}

TEST(GridEncodings, Examples) {
  EXPECT_EQ(grid_to_and(Grid::parse("PG")).to_literal(), "01");
  EXPECT_EQ(grid_to_or(Grid::parse("PG")).to_literal(), "10");
  const auto fig = Grid::parse("PGGG/GPPG/GPGG/GPPP/PPGP");
  EXPECT_EQ(grid_to_and(fig).to_literal(), "0111/1001/1011/1000/0010");
  EXPECT_EQ(grid_to_or(fig).to_literal(), "1000/0110/0100/0111/1101");
}

TEST(GridEncodings, RoundTripAndComplement) {
  Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    auto g = random_grid(rng, rng() % 5, 1 + rng() % 6);
    EXPECT_EQ(and_to_grid(grid_to_and(g)), g);
    EXPECT_EQ(grid_to_or(g), grid_to_and(g).complement());
  }
}

TEST(DqbnToAvoidTrue, ConstructionOnWorkedRows) {
  const auto c = dqbn_to_avoid_true(BooleanMatrix::parse("1001101/0101110/1001110"));
  EXPECT_EQ(c.var_count, 7U);
  EXPECT_EQ(c.true_set, 0U);
  // Zero entries of each row, as built.
  EXPECT_EQ(c.clauses, (std::vector<std::uint64_t>{vars({2, 3, 6}), vars({1, 3, 7}), vars({2, 3, 7})}));
  const auto listed = dqbn_to_avoid_true(BooleanMatrix::parse("1001100/0101110/1001110"));
  EXPECT_EQ(listed.clauses, (std::vector<std::uint64_t>{vars({2, 3, 6, 7}), vars({1, 3, 7}), vars({2, 3, 7})}));
}

TEST(DqbnToAvoidTrue, DegenerateRows) {
  EXPECT_EQ(dqbn_to_avoid_true(BooleanMatrix::parse("111")).clauses, (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(dqbn_to_avoid_true(BooleanMatrix::parse("000")).clauses, (std::vector<std::uint64_t>{vars({1, 2, 3})}));
}

CnfPosition reverse_example() {
  CnfPosition c;
  c.var_count = 8;
  c.clauses = {vars({1, 2, 3, 4}), vars({1, 5, 6, 7}), vars({1, 3, 6}), vars({2, 5, 8})};
  c.true_set = vars({8});
  return c;
}

TEST(AvoidTrueToDqbn, Examples) {
  EXPECT_EQ(avoid_true_to_dqbn(reverse_example()).to_literal(), "00001110/01110000/01011010");
  EXPECT_EQ(avoid_true_to_dqbn(CnfPosition{1, {vars({1})}, 0}).to_literal(), "0");
  const auto covered = avoid_true_to_dqbn(CnfPosition{2, {vars({1}), vars({1, 2})}, vars({1})});
  EXPECT_EQ(covered.rows(), 0U);
  EXPECT_EQ(dqbn_to_dqnim(covered), (Superposition{std::vector<std::vector<std::uint32_t>>{{0, 0}}}));
}

TEST(AvoidTrueToDqbn, ValuePreserved) {
  const auto c = reverse_example();
  EXPECT_EQ(oracle::grundy(AvoidTrue{}, c), oracle::grundy(DemiQuantumBooleanNim{}, avoid_true_to_dqbn(c)));
}

TEST(NodeKaylesToFriendCircle, Examples) {
  const auto single = node_kayles_to_friend_circle(UndirectedGraph(1));
  EXPECT_EQ(single.graph.edges().size(), 1U);
  EXPECT_FALSE(single.is_true(0, 1));
  EXPECT_EQ(friend_circle_options(single).size(), 1U);

  const auto edge = node_kayles_to_friend_circle(UndirectedGraph(2, {{0, 1}}));
  EXPECT_EQ(edge.graph.vertex_count(), 4U);
  EXPECT_TRUE(edge.is_true(0, 1));
  auto options = friend_circle_options(edge);
  auto it = std::find_if(options.begin(), options.end(), [](const auto& o) { return o.move.vertex == 0; });
  ASSERT_NE(it, options.end());
  EXPECT_TRUE(friend_circle_options(it->position).empty());

  UndirectedGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(oracle::grundy(NodeKayles{}, path), Nimber{2});
  EXPECT_EQ(oracle::grundy(FriendCircle{}, node_kayles_to_friend_circle(path)), Nimber{2});
}

FriendCirclePosition bipartite_figure() {
  // Seeds 0..5 are the figure's columns 1..6, vertices 6..9 its rows a..d.
  const char* rows[] = {"101010", "111000", "010111", "110100"};
  UndirectedGraph g(10);
  for (std::uint32_t r = 0; r < 4; ++r)
    for (std::uint32_t c = 0; c < 6; ++c) g.add_edge(c, 6 + r);
  FriendCirclePosition p(g, 0b111111);
  for (std::uint32_t r = 0; r < 4; ++r)
    for (std::uint32_t c = 0; c < 6; ++c)
      if (rows[r][c] == '1') p.set_weight(c, 6 + r, true);
  return p;
}

TEST(BipartiteFriendCircleToOr, Figure) {
  EXPECT_EQ(bipartite_fc_to_or(bipartite_figure()).to_literal(), "101010/111000/010111/110100");
}

TEST(BipartiteFriendCircleToOr, AllFalseAllTrueAndRejects) {
  UndirectedGraph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  FriendCirclePosition p(k22, 0b0011);
  EXPECT_EQ(bipartite_fc_to_or(p).to_literal(), "00/00");
  for (auto [u, v] : k22.edges()) p.set_weight(u, v, true);
  EXPECT_EQ(bipartite_fc_to_or(p).to_literal(), "11/11");
  EXPECT_TRUE(friend_circle_options(p).empty());
  EXPECT_TRUE(cw_or_options(bipartite_fc_to_or(p)).empty());
  UndirectedGraph missing(4, {{0, 2}, {0, 3}, {1, 2}});
  EXPECT_THROW(bipartite_fc_to_or(FriendCirclePosition(missing, 0b0011)), InapplicableTransformer);
  EXPECT_THROW(bipartite_fc_to_or(FriendCirclePosition(k22, 0b0001)), InapplicableTransformer);
}

TEST(DqnimToDemographic, EquationOne) {
  const Superposition s{std::vector<std::vector<std::uint32_t>>{
      {5, 3, 0, 4, 2, 2}, {1, 3, 3, 2, 1, 0}, {0, 0, 4, 6, 5, 7}, {4, 2, 5, 0, 1, 2}}};
  const auto z = dqnim_to_demographic(s);
  EXPECT_EQ(z.graph.vertex_count(), 24U);
  EXPECT_EQ(z.graph.edges().size(), 4U * 15U);
  EXPECT_EQ(z.demographics.size(), 6U);
  for (std::uint32_t r = 0; r < 4; ++r)
    for (std::uint32_t c = 0; c < 6; ++c) EXPECT_EQ(z.theta[r * 6 + c], s.realizations()[r].heaps[c]);
  ReductionReport report = verify_reduction(make_document(RulesetId::DemiQuantumNim, s), "dqnim_to_demographic");
  EXPECT_TRUE(report.pass) << report.detail;
}

TEST(DqnimToDemographic, SmallCases) {
  const Superposition s{std::vector<std::vector<std::uint32_t>>{{2, 2}}};
  const auto z = dqnim_to_demographic(s);
  EXPECT_EQ(z.theta, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(oracle::grundy(DemographicInfluence{}, z), Nimber{0});
  const auto zero = dqnim_to_demographic(Superposition{std::vector<std::vector<std::uint32_t>>{{0}}});
  EXPECT_TRUE(demographic_options(zero).empty());
}

TEST(NodeKaylesToDemographic, StarFigure) {
  UndirectedGraph star(3, {{0, 1}, {0, 2}});
  const auto z = node_kayles_to_demographic(star);
  EXPECT_EQ(z.graph.vertex_count(), 6U);
  EXPECT_EQ(z.graph.edges().size(), 9U);
  EXPECT_EQ(z.theta, (std::vector<std::int64_t>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(z.demographics, (std::vector<std::uint64_t>{0b001001, 0b010010, 0b100100}));
}

TEST(NodeKaylesToDemographic, SmallValues) {
  const auto single = node_kayles_to_demographic(UndirectedGraph(1));
  EXPECT_EQ(demographic_options(single).size(), 1U);
  EXPECT_EQ(oracle::grundy(DemographicInfluence{}, single), Nimber{1});
  UndirectedGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(oracle::grundy(DemographicInfluence{}, node_kayles_to_demographic(path)), Nimber{2});
}

TEST(FriendCircleToDemographic, CycleFigure) {
  // s1, s2, s3, x as 0..3; only (s2, s3) is weighted t.
  UndirectedGraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  FriendCirclePosition p(cycle, 0b1111);
  p.set_weight(1, 2, true);
  const auto z = friend_circle_to_demographic(p);
  // Sorted edges (0,1) (0,3) (1,2) (2,3).
  EXPECT_EQ(z.theta, (std::vector<std::int64_t>{1, 1, 0, 1}));
  EXPECT_EQ(z.graph.edges().size(), 4U);
  EXPECT_EQ(z.demographics, (std::vector<std::uint64_t>{0b0011, 0b0101, 0b1100, 0b1010}));
}

TEST(FriendCircleToDemographic, SmallCases) {
  FriendCirclePosition single(UndirectedGraph(2, {{0, 1}}), 0b01);
  const auto z = friend_circle_to_demographic(single);
  EXPECT_EQ(z.theta, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(z.demographics.size(), 1U);

  UndirectedGraph g(5, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 4}, {3, 4}});
  FriendCirclePosition fig(g, 0b01111);
  fig.set_weight(0, 1, true);
  fig.set_weight(0, 4, true);
  EXPECT_EQ(oracle::grundy(FriendCircle{}, fig), oracle::grundy(DemographicInfluence{}, friend_circle_to_demographic(fig)));
}

TEST(AvoidTrueToHypergraph, Examples) {
  const CnfPosition two{2, {vars({1}), vars({2})}, 0};
  const auto h = avoid_true_to_hypergraph(two);
  EXPECT_EQ(h.hyperedges, (std::vector<std::uint64_t>{0b110, 0b101}));
  EXPECT_EQ(h.current, 2U);
  EXPECT_EQ(h.pebbles, 0b011U);
  EXPECT_EQ(oracle::grundy(AvoidTrue{}, two), oracle::grundy(HypergraphNim{}, h));
  for (const auto& o : hypergraph_nim_options(h)) EXPECT_TRUE(hypergraph_nim_options(o.position).empty());

  EXPECT_TRUE(hypergraph_nim_options(avoid_true_to_hypergraph(CnfPosition{3, {}, 0})).empty());

  const CnfPosition worked{7, {vars({2, 3, 6, 7}), vars({1, 3, 7}), vars({2, 3, 7})}, 0};
  EXPECT_EQ(oracle::grundy(AvoidTrue{}, worked), oracle::grundy(HypergraphNim{}, avoid_true_to_hypergraph(worked)));
}

TEST(VerifyReduction, Examples) {
  auto r = verify_reduction(make_document(RulesetId::TransverseWave, Grid::parse("PPG/GGP")), "grid_to_and");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.source_grundy, Nimber{2});
  EXPECT_EQ(r.target_grundy, Nimber{2});
  EXPECT_TRUE(r.isomorphism_checked);
  EXPECT_GT(r.position_pairs, 0U);

  UndirectedGraph path(3, {{0, 1}, {1, 2}});
  r = verify_reduction(make_document(RulesetId::NodeKayles, path), "node_kayles_to_friend_circle");
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.source_grundy, Nimber{2});
}

TEST(VerifyReduction, WrongRulesetRejected) {
  EXPECT_THROW(verify_reduction(make_document(RulesetId::Nim, NimPosition{{1}}), "grid_to_and"), InapplicableTransformer);
  EXPECT_THROW(apply_transformer("no_such", make_document(RulesetId::Nim, NimPosition{{1}})), InapplicableTransformer);
}

TEST(Lockstep, DetectsBrokenMap) {
  const auto g = Grid::parse("PGG/GPG");
  auto wrong = [](const ColumnMove& m) { return ColumnMove{(m.column + 1) % 3}; };
  auto r = lockstep(TransverseWave{}, g, CrosswiseAnd{}, grid_to_and(g), wrong, 100000);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Lattice, ExhaustiveGridChain) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& g : all_grids(m, n)) {
        const auto v = oracle::grundy(TransverseWave{}, g);
        const auto b = grid_to_and(g);
        ASSERT_EQ(oracle::grundy(CrosswiseAnd{}, b), v);
        ASSERT_EQ(oracle::grundy(CrosswiseOr{}, grid_to_or(g)), v);
        ASSERT_EQ(oracle::grundy(DemiQuantumBooleanNim{}, b), v);
        ASSERT_EQ(oracle::grundy(AvoidTrue{}, dqbn_to_avoid_true(b)), v);
      }
    }
  }
}

TEST(Lattice, ExhaustiveSmallGraphs) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(n)) {
      const auto doc = make_document(RulesetId::NodeKayles, g);
      for (const char* name : {"node_kayles_to_friend_circle", "node_kayles_to_demographic"}) {
        auto r = verify_reduction(doc, name);
        ASSERT_TRUE(r.pass) << name << ": " << r.detail;
      }
    }
  }
}

TEST(Lattice, SampledEveryTransformer) {
  for (const auto& info : transformers()) {
    Rng rng(101);
    for (int t = 0; t < 40; ++t) {
      const auto doc = sample_source(info.name, rng);
      auto r = verify_reduction(doc, info.name);
      ASSERT_TRUE(r.pass) << info.name << ": " << r.detail << " " << r.counterexample.value_or("");
    }
  }
}

TEST(Convert, Paths) {
  auto chain = conversion_path(RulesetId::TransverseWave, RulesetId::AvoidTrue);
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->front(), "grid_to_and");
  EXPECT_EQ(chain->back(), "dqbn_to_avoid_true");
  EXPECT_FALSE(conversion_path(RulesetId::HypergraphNim, RulesetId::TransverseWave));
  EXPECT_TRUE(conversion_path(RulesetId::Nim, RulesetId::Nim)->empty());
}

TEST(Convert, GridToAvoidTruePreservesValue) {
  const auto source = make_document(RulesetId::TransverseWave, Grid::parse("PPG/GGP"));
  const auto result = convert(source, RulesetId::AvoidTrue);
  EXPECT_EQ(result.document.ruleset, RulesetId::AvoidTrue);
  const auto& c = std::get<CnfPosition>(result.document.payload);
  EXPECT_EQ(oracle::grundy(AvoidTrue{}, c), Nimber{2});
  EXPECT_EQ(result.moves.size(), 3U);
  EXPECT_EQ(result.moves[0], (std::pair<std::string, std::string>{"0", "x1"}));
}

TEST(Convert, NodeKaylesToFriendCircle) {
  UndirectedGraph path(3, {{0, 1}, {1, 2}});
  const auto result = convert(make_document(RulesetId::NodeKayles, path), RulesetId::FriendCircle);
  EXPECT_EQ(result.chain, (std::vector<std::string>{"node_kayles_to_friend_circle"}));
  EXPECT_EQ(std::get<FriendCirclePosition>(result.document.payload), node_kayles_to_friend_circle(path));
  EXPECT_THROW(convert(make_document(RulesetId::HypergraphNim, avoid_true_to_hypergraph(CnfPosition{1, {1}, 0})),
                       RulesetId::Nim),
               InapplicableTransformer);
}

}  // namespace
}  // namespace twave
