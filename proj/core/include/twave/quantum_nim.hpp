#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twave/games.hpp"
#include "twave/solver.hpp"

namespace twave {

// A superposition of distinct classical Nim moves; width 1 is a classical move.
struct QuantumMove {
  std::vector<NimMove> parts;  // sorted, distinct

  std::size_t width() const { return parts.size(); }
  auto operator<=>(const QuantumMove&) const = default;
};

// "<(-1,0)|(0,-1)>"
std::string render(const QuantumMove& m);

// Variant D: every non-empty set of classical moves, each feasible for some
// realization. `max_width` 0 means unbounded. Successors are deduplicated and
// sorted.
std::vector<Option<QuantumMove, Superposition>> qnim_options(const Superposition& s, std::uint32_t max_width = 0);

struct QuantumNim {
  using Position = Superposition;
  using Move = QuantumMove;
  static constexpr std::string_view id = "quantum_nim";

  std::uint32_t max_width = 0;

  auto options(const Superposition& s) const { return qnim_options(s, max_width); }
  Superposition normalize(const Superposition& s) const { return s.canonical(); }
  std::string key(const Superposition& s) const { return memo_key(s); }
};

OutcomeClass qnim_outcome(const Superposition& s, const SolveBudget& budget = {}, std::uint32_t max_width = 0);

}  // namespace twave
