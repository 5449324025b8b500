#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "twave/error.hpp"
#include "twave/quantum_nim.hpp"
#include "twave/random_positions.hpp"

namespace twave {
namespace {

Superposition sp(std::vector<std::vector<std::uint32_t>> rows) { return Superposition{rows}; }

QuantumMove qm(std::vector<NimMove> parts) {
  std::sort(parts.begin(), parts.end());
  return QuantumMove{parts};
}

NimMove take(std::uint32_t heap, std::uint32_t amount) { return NimMove{heap, amount, 2}; }

Superposition successor(const Superposition& s, const QuantumMove& m) {
  auto options = qnim_options(s);
  auto it = std::find_if(options.begin(), options.end(), [&](const auto& o) { return o.move == m; });
  EXPECT_NE(it, options.end()) << render(m);
  return it == options.end() ? s : it->position;
}

TEST(QuantumNim, Rendering) {
  EXPECT_EQ(render(qm({take(0, 1), take(1, 1)})), "<(-1,0)|(0,-1)>");
  EXPECT_EQ(render(qm({take(1, 2)})), "<(0,-2)>");
}

TEST(QuantumNim, FirstEdge) {
  EXPECT_EQ(successor(sp({{2, 2}}), qm({take(0, 1), take(1, 1)})), sp({{1, 2}, {2, 1}}));
}

TEST(QuantumNim, SecondLevelEdges) {
  const auto root = sp({{1, 2}, {2, 1}});
  EXPECT_EQ(successor(root, qm({take(0, 1), take(1, 2)})), sp({{0, 2}, {1, 0}, {1, 1}}).canonical());
  EXPECT_EQ(successor(root, qm({take(0, 1)})), sp({{0, 2}, {1, 1}}).canonical());
  EXPECT_EQ(successor(root, qm({take(0, 2)})), sp({{0, 1}}));
  EXPECT_EQ(successor(root, qm({take(0, 1), take(0, 2)})), sp({{0, 2}, {1, 1}, {0, 1}}).canonical());
  EXPECT_EQ(successor(root, qm({take(0, 1), take(1, 1)})), sp({{0, 2}, {1, 1}, {2, 0}}).canonical());
}

TEST(QuantumNim, Outcomes) {
  EXPECT_EQ(qnim_outcome(sp({{2, 2}})), OutcomeClass::N);
  EXPECT_EQ(qnim_outcome(sp({{1, 2}, {2, 1}})), OutcomeClass::P);
  EXPECT_EQ(qnim_outcome(sp({{0, 1}})), OutcomeClass::N);
  for (const auto& s : {sp({{0, 2}, {1, 0}, {1, 1}}), sp({{0, 2}, {1, 1}}), sp({{0, 1}}), sp({{0, 2}, {1, 1}, {0, 1}}),
                        sp({{0, 2}, {1, 1}, {2, 0}})}) {
    EXPECT_EQ(qnim_outcome(s), OutcomeClass::N);
  }
}

TEST(QuantumNim, WidthTwoAgrees) {
  EXPECT_EQ(qnim_outcome(sp({{2, 2}}), {}, 2), OutcomeClass::N);
  EXPECT_EQ(qnim_outcome(sp({{1, 2}, {2, 1}}), {}, 2), OutcomeClass::P);
}

TEST(QuantumNim, TerminalAndClassicalRestriction) {
  EXPECT_TRUE(qnim_options(sp({{0, 0}})).empty());
  const NimPosition p{{3, 5, 7}};
  auto quantum = qnim_options(Superposition{std::vector<NimPosition>{p}}, 1);
  auto classical = nim_options(p);
  ASSERT_EQ(quantum.size(), classical.size());
  for (std::size_t i = 0; i < quantum.size(); ++i) {
    ASSERT_EQ(quantum[i].move.width(), 1U);
    EXPECT_EQ(quantum[i].move.parts[0], classical[i].move);
    EXPECT_EQ(quantum[i].position.realizations(), std::vector<NimPosition>{classical[i].position});
  }
}

TEST(QuantumNim, PartsFeasibleSomewhere) {
  Rng rng(83);
  for (int t = 0; t < 60; ++t) {
    const auto s = random_superposition(rng, 2, 2, 2).canonical();
    for (const auto& o : qnim_options(s)) {
      for (const auto& part : o.move.parts) {
        EXPECT_TRUE(std::any_of(s.realizations().begin(), s.realizations().end(),
                                [&](const NimPosition& b) { return b.heaps[part.heap] >= part.amount; }));
      }
    }
  }
}

std::uint64_t total(const NimPosition& b) { return std::accumulate(b.heaps.begin(), b.heaps.end(), 0ULL); }

TEST(QuantumNim, EachRealizationComesFromOnePart) {
  Rng rng(89);
  for (int t = 0; t < 60; ++t) {
    const auto s = random_superposition(rng, 2, 2, 2).canonical();
    std::uint64_t top = 0;
    for (const auto& b : s.realizations()) top = std::max(top, total(b));
    for (const auto& o : qnim_options(s)) {
      for (const auto& r : o.position.realizations()) {
        bool found = false;
        for (const auto& part : o.move.parts) {
          for (const auto& b : s.realizations()) {
            if (b.heaps[part.heap] < part.amount) continue;
            auto c = b;
            c.heaps[part.heap] -= part.amount;
            found = found || c == r;
          }
        }
        EXPECT_TRUE(found);
        EXPECT_LT(total(r), top);
      }
    }
  }
}

TEST(QuantumNim, WideInputNeedsWidthCap) {
  EXPECT_THROW(qnim_options(sp({{6, 6, 6, 6}})), InvalidArgument);
  EXPECT_NO_THROW(qnim_options(sp({{6, 6, 6, 6}}), 2));
}

}  // namespace
}  // namespace twave
