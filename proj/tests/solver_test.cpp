#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "twave/normalize.hpp"
#include "twave/random_positions.hpp"
#include "twave/reductions.hpp"
#include "twave/solver.hpp"
#include "oracle.hpp"

namespace twave {
namespace {

Nimber tw(const char* literal) { return Solver<TransverseWave>{}.grundy(Grid::parse(literal)); }

TEST(Solver, TableValues) {
  EXPECT_EQ(tw("PPG/GGP"), Nimber{2});
  EXPECT_EQ(tw("PPGG/GGPG"), Nimber{3});
  EXPECT_EQ(tw("PPGGGG/GGPPPG/PGGPGP"), Nimber{4});
  EXPECT_EQ(tw("PP/PP"), Nimber{0});
}

TEST(Solver, MatchesOracleOnAllSmallGrids) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      Solver<TransverseWave> solver;
      for (const auto& g : all_grids(m, n)) {
        ASSERT_EQ(solver.grundy(g), oracle::grundy(TransverseWave{}, g)) << g.to_literal();
      }
    }
  }
}

TEST(Solver, OutcomeExamples) {
  Solver<Nim> nim;
  EXPECT_EQ(nim.outcome(NimPosition{{2, 2}}), OutcomeClass::P);
  EXPECT_EQ(nim.outcome(NimPosition{{1, 2}}), OutcomeClass::N);
}

TEST(Solver, ReverseExampleOutcomeMatchesSuperposition) {
  // Clauses over x1..x8 from the rows 00001110 / 01110000 / 01011010 plus
  // one clause touching T = {x8}.
  CnfPosition c;
  c.var_count = 8;
  auto zeros = [](const char* row) {
    std::uint64_t m = 0;
    for (int j = 0; row[j]; ++j)
      if (row[j] == '0') m |= 1ULL << j;
    return m;
  };
  c.clauses = {zeros("00001110"), zeros("01110000"), zeros("01011010"), (1ULL << 7) | 1ULL};
  c.true_set = 1ULL << 7;
  const auto s = dqbn_to_dqnim(avoid_true_to_dqbn(c));
  EXPECT_EQ(Solver<AvoidTrue>{}.outcome(c), Solver<DemiQuantumNim>{}.outcome(s));
  EXPECT_EQ(oracle::grundy(AvoidTrue{}, c), oracle::grundy(DemiQuantumNim{}, s));
}

TEST(Solver, OutcomeAgreesWithGrundy) {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    auto g = random_grid(rng, 1 + rng() % 4, 1 + rng() % 5);
    Solver<TransverseWave> a, b;
    EXPECT_EQ(a.outcome(g), outcome_of(b.grundy(g)));
  }
}

TEST(Normalize, Examples) {
  const auto single = normalize(Grid::parse("PP/GP/GP"));
  EXPECT_EQ(single.rows(), 1U);
  EXPECT_EQ(single.to_literal(), normalize(Grid::parse("GP")).to_literal());
  EXPECT_EQ(normalize(Grid::parse("PGG/GPG/GGP")).to_literal(), normalize(Grid::parse("GGP/PGG/GPG")).to_literal());
  const Superposition a{std::vector<std::vector<std::uint32_t>>{{1, 0}, {1, 0}, {0, 0}}};
  const Superposition b{std::vector<std::vector<std::uint32_t>>{{1, 0}, {0, 0}}};
  EXPECT_EQ(normalize(a), normalize(b));
  EXPECT_EQ(oracle::grundy(DemiQuantumNim{}, a), oracle::grundy(DemiQuantumNim{}, b));
}

TEST(Normalize, PreservesValueOnAllSmallGrids) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& g : all_grids(m, n)) {
        ASSERT_EQ(oracle::grundy(TransverseWave{}, normalize(g)), oracle::grundy(TransverseWave{}, g)) << g.to_literal();
      }
    }
  }
}

Grid permuted(const Grid& g, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Grid out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, g.at(rows[i], cols[j]));
  return out;
}

TEST(Normalize, SymmetriesOnRandomGrids) {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 5;
    auto g = random_grid(rng, m, n);
    std::vector<std::size_t> rows(m), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    const auto value = oracle::grundy(TransverseWave{}, g);
    EXPECT_EQ(oracle::grundy(TransverseWave{}, permuted(g, rows, cols)), value);
    auto dup = rows;
    dup.push_back(rows[rng() % m]);
    EXPECT_EQ(oracle::grundy(TransverseWave{}, permuted(g, dup, cols)), value);
    Grid padded(m + 1, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) padded.set(i, j, g.at(i, j));
    for (std::size_t j = 0; j < n; ++j) padded.set(m, j, Color::Purple);
    EXPECT_EQ(oracle::grundy(TransverseWave{}, padded), value);
    EXPECT_EQ(Solver<TransverseWave>{}.grundy(g), value);
  }
}

TEST(Normalize, OtherRulesetsMatchOracle) {
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    auto b = random_boolean_matrix(rng, 1 + rng() % 3, 1 + rng() % 4);
    EXPECT_EQ(Solver<CrosswiseAnd>{}.grundy(b), oracle::grundy(CrosswiseAnd{}, b));
    EXPECT_EQ(Solver<CrosswiseOr>{}.grundy(b), oracle::grundy(CrosswiseOr{}, b));
    EXPECT_EQ(Solver<DemiQuantumBooleanNim>{}.grundy(b), oracle::grundy(DemiQuantumBooleanNim{}, b));
    auto s = random_superposition(rng, 3, 3, 3);
    EXPECT_EQ(Solver<DemiQuantumNim>{}.grundy(s), oracle::grundy(DemiQuantumNim{}, s));
  }
}

TEST(Normalize, InfluenceNetworkKeepsMovesAndValue) {
  Rng rng(59);
  const DemographicInfluence game{};
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng() % 5;
    InfluenceNetwork z{random_graph(rng, n), {}, {}};
    for (std::size_t v = 0; v < n; ++v) z.theta.push_back(static_cast<std::int64_t>(rng() % 6) - 2);
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) z.demographics.push_back(rng() % (1ULL << n));
    const auto norm = normalize(z);
    for (std::size_t v = 0; v < n; ++v) {
      if (norm.theta[v] >= 0) continue;
      for (auto d : norm.demographics) EXPECT_FALSE(d >> v & 1);
    }
    EXPECT_EQ(oracle::grundy(game, z), oracle::grundy(game, norm));
    const auto raw = game.options(z);
    const auto reduced = game.options(norm);
    ASSERT_EQ(raw.size(), reduced.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      EXPECT_EQ(raw[i].move, reduced[i].move);
      EXPECT_EQ(normalize(raw[i].position), normalize(reduced[i].position));
    }
  }
}

template <class G>
void check_replay(const typename G::Position& p) {
  Solver<G> solver;
  const auto result = solver.solve(p);
  EXPECT_EQ(result.outcome == OutcomeClass::N, !result.grundy.is_zero());
  EXPECT_EQ(result.best_move.has_value(), result.outcome == OutcomeClass::N);
  const G game{};
  for (const auto& o : game.options(p)) {
    const auto child = solver.grundy(o.position);
    if (result.outcome == OutcomeClass::P) EXPECT_FALSE(child.is_zero());
    if (result.best_move && o.move == *result.best_move) EXPECT_TRUE(child.is_zero());
  }
}

TEST(Solver, BestMoveReplay) {
  Rng rng(53);
  for (int t = 0; t < 150; ++t) {
    check_replay<TransverseWave>(random_grid(rng, 1 + rng() % 4, 1 + rng() % 5));
    check_replay<Nim>(NimPosition{{static_cast<std::uint32_t>(rng() % 5), static_cast<std::uint32_t>(rng() % 5),
                                   static_cast<std::uint32_t>(rng() % 5)}});
    check_replay<NodeKayles>(random_graph(rng, 1 + rng() % 7));
  }
}

TEST(Solver, BestMoveIsLeastWinningMove) {
  Solver<Nim> solver;
  auto result = solver.solve(NimPosition{{1, 2}});
  ASSERT_TRUE(result.best_move);
  EXPECT_EQ(render(*result.best_move), "(0,-1)");
}

TEST(Solver, NodeAndDepthBounds) {
  Rng rng(59);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 4;
    auto g = random_grid(rng, m, n);
    Solver<TransverseWave> solver;
    auto r = solver.solve(g);
    EXPECT_LE(r.nodes_expanded, 1ULL << (m * n));
    EXPECT_LE(r.max_depth, n);
  }
}

TEST(Solver, BudgetExceeded) {
  Solver<TransverseWave> solver(TransverseWave{}, SolveBudget{5, 1000});
  try {
    solver.grundy(Grid::parse("PPGGGG/GGPPPG/PGGPGP"));
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.nodes_expanded(), 5U);
  }
  Solver<TransverseWave> tight(TransverseWave{}, SolveBudget{1000, 2});
  EXPECT_THROW(tight.grundy(Grid::parse("PPGGGG/GGPPPG/PGGPGP")), BudgetExceeded);
  EXPECT_THROW((SolveBudget{0, 1}.validate()), InvalidArgument);
}

TEST(Solver, MemoReusedAcrossCalls) {
  Solver<TransverseWave> solver;
  const auto g = Grid::parse("PPGGGG/GGPPPG/PGGPGP");
  solver.grundy(g);
  const auto size = solver.memo_size();
  EXPECT_GT(size, 0U);
  solver.grundy(g);
  EXPECT_EQ(solver.nodes_expanded(), 0U);
  solver.clear();
  EXPECT_EQ(solver.memo_size(), 0U);
}

TEST(Solver, GreenColumnExtractionIsEquivalent) {
  Rng rng(61);
  TransverseWave fast;
  fast.extract_green_columns = true;
  for (int t = 0; t < 300; ++t) {
    auto g = random_grid(rng, 1 + rng() % 4, 1 + rng() % 6);
    EXPECT_EQ(Solver<TransverseWave>(fast).grundy(g), Solver<TransverseWave>{}.grundy(g)) << g.to_literal();
  }
}

TEST(GameSum, Examples) {
  const std::vector<Nimber> a{Nimber{2}, Nimber{1}};
  EXPECT_EQ(game_sum_grundy(a), Nimber{3});
  const std::vector<Nimber> b{Nimber{0}};
  EXPECT_EQ(game_sum_grundy(b), Nimber{0});
  const std::vector<Nimber> c{Nimber{1}, Nimber{1}};
  EXPECT_EQ(game_sum_grundy(c), Nimber{0});
}

TEST(GameSum, NimHeapsAddAsComponents) {
  Solver<Nim> solver;
  for (std::uint32_t a = 0; a < 6; ++a) {
    for (std::uint32_t b = 0; b < 6; ++b) {
      const std::vector<SolveResult<NimMove>> parts{solver.solve(NimPosition{{a}}), solver.solve(NimPosition{{b}})};
      EXPECT_EQ(game_sum_grundy<NimMove>(parts), solver.grundy(NimPosition{{a, b}}));
    }
  }
}

}  // namespace
}  // namespace twave
