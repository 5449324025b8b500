#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "twave/error.hpp"
#include "twave/games.hpp"

namespace twave {

template <class Position>
struct LockstepResult {
  bool ok = true;
  std::uint32_t depth = 0;
  std::uint64_t pairs = 0;
  std::optional<Position> counterexample;
  std::string detail;
};

// Walks both game trees together, requiring that `map` sends the source
// options bijectively onto the target options at every reachable pair.
// Pairs are keyed on raw positions, except for rulesets whose normal form
// keeps every move label (label_stable).
template <class G>
std::string lockstep_key(const G& game, const typename G::Position& p) {
  if constexpr (requires { requires G::label_stable; }) {
    return game.key(game.normalize(p));
  } else {
    return game.key(p);
  }
}

template <GameRules S, GameRules T, class MoveMap>
LockstepResult<typename S::Position> lockstep(const S& source_game, const typename S::Position& source,
                                              const T& target_game, const typename T::Position& target,
                                              MoveMap&& map, std::uint64_t max_pairs) {
  LockstepResult<typename S::Position> result;
  std::unordered_set<std::string> seen;

  auto walk = [&](auto&& self, const typename S::Position& s, const typename T::Position& t,
                  std::uint32_t depth) -> bool {
    std::string key = lockstep_key(source_game, s);
    key += '|';
    key += lockstep_key(target_game, t);
    if (!seen.insert(std::move(key)).second) return true;
    if (++result.pairs > max_pairs) throw BudgetExceeded("lockstep pair limit reached", result.pairs - 1);
    result.depth = std::max(result.depth, depth);

    auto sopts = source_game.options(s);
    auto topts = target_game.options(t);
    auto fail = [&](std::string why) {
      result.ok = false;
      result.counterexample = s;
      result.detail = std::move(why) + " at depth " + std::to_string(depth);
      return false;
    };
    if (sopts.size() != topts.size()) {
      return fail(std::to_string(sopts.size()) + " source options vs " + std::to_string(topts.size()) +
                  " target options");
    }
    std::vector<std::size_t> used(topts.size(), 0);
    for (const auto& so : sopts) {
      const typename T::Move image = map(so.move);
      auto it = std::find_if(topts.begin(), topts.end(), [&](const auto& o) { return o.move == image; });
      if (it == topts.end()) return fail("source move " + render(so.move) + " has no feasible image " + render(image));
      const auto idx = static_cast<std::size_t>(it - topts.begin());
      if (used[idx]++) return fail("two source moves map to target move " + render(image));
      if (!self(self, so.position, it->position, depth + 1)) return false;
    }
    return true;
  };
  walk(walk, source, target, 0);
  return result;
}

}  // namespace twave
