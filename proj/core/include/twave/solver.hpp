#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "twave/error.hpp"
#include "twave/games.hpp"
#include "twave/nimber.hpp"

namespace twave {

struct SolveBudget {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t max_memo_entries = 10'000'000;

  // Throws InvalidArgument when a limit is zero.
  void validate() const;
};

template <class Move>
struct SolveResult {
  Nimber grundy;
  OutcomeClass outcome = OutcomeClass::P;
  std::optional<Move> best_move;
  std::uint64_t nodes_expanded = 0;
  std::uint32_t max_depth = 0;
};

template <class Move>
Nimber game_sum_grundy(std::span<const SolveResult<Move>> components) {
  Nimber total;
  for (const auto& c : components) total = total + c.grundy;
  return total;
}

Nimber game_sum_grundy(std::span<const Nimber> components);

// Memoized exhaustive search. The memo survives across calls; node and depth
// counters are reset by every public entry point. Not thread-safe: share a
// Solver only under external locking.
template <GameRules G>
class Solver {
 public:
  using Position = typename G::Position;
  using Move = typename G::Move;

  explicit Solver(G game = G{}, SolveBudget budget = {}) : game_(std::move(game)), budget_(budget) {
    budget_.validate();
  }

  SolveResult<Move> solve(const Position& p) {
    reset_counters();
    SolveResult<Move> result;
    auto options = game_.options(p);
    count_node();
    std::vector<Nimber> values;
    values.reserve(options.size());
    for (const auto& o : options) {
      const Nimber v = value(o.position, 1);
      values.push_back(v);
      if (v.is_zero() && (!result.best_move || o.move < *result.best_move)) result.best_move = o.move;
    }
    result.grundy = mex(values);
    result.outcome = outcome_of(result.grundy);
    result.nodes_expanded = nodes_;
    result.max_depth = max_depth_;
    remember(game_.key(game_.normalize(p)), result.grundy);
    return result;
  }

  Nimber grundy(const Position& p) {
    reset_counters();
    return value(p, 0);
  }

  // Grundy value of every option, in option order.
  std::vector<std::pair<Move, Nimber>> option_values(const Position& p) {
    reset_counters();
    std::vector<std::pair<Move, Nimber>> out;
    for (const auto& o : game_.options(p)) out.emplace_back(o.move, value(o.position, 1));
    return out;
  }

  // N iff some option is P; stops at the first P option.
  OutcomeClass outcome(const Position& p) {
    reset_counters();
    return next_wins(p, 0) ? OutcomeClass::N : OutcomeClass::P;
  }

  std::uint64_t nodes_expanded() const { return nodes_; }
  std::uint32_t max_depth() const { return max_depth_; }
  std::size_t memo_size() const { return memo_.size() + outcome_memo_.size(); }
  void clear() {
    memo_.clear();
    outcome_memo_.clear();
  }
  const G& game() const { return game_; }
  const SolveBudget& budget() const { return budget_; }

 private:
  Nimber value(const Position& p, std::uint32_t depth) {
    max_depth_ = std::max(max_depth_, depth);
    Position canonical = game_.normalize(p);
    Nimber extra;
    if constexpr (requires { game_.split(canonical); }) {
      auto [core, summand] = game_.split(canonical);
      canonical = std::move(core);
      extra = summand;
    }
    std::string key = game_.key(canonical);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second + extra;
    count_node();
    auto options = game_.options(canonical);
    std::vector<Nimber> values;
    values.reserve(options.size());
    for (const auto& o : options) values.push_back(value(o.position, depth + 1));
    const Nimber result = mex(values);
    remember(std::move(key), result);
    return result + extra;
  }

  bool next_wins(const Position& p, std::uint32_t depth) {
    max_depth_ = std::max(max_depth_, depth);
    const Position canonical = game_.normalize(p);
    std::string key = game_.key(canonical);
    if (auto it = memo_.find(key); it != memo_.end()) return !it->second.is_zero();
    if (auto it = outcome_memo_.find(key); it != outcome_memo_.end()) return it->second;
    count_node();
    bool wins = false;
    for (const auto& o : game_.options(canonical)) {
      if (!next_wins(o.position, depth + 1)) {
        wins = true;
        break;
      }
    }
    if (memo_size() >= budget_.max_memo_entries) {
      throw BudgetExceeded("memo table limit reached", nodes_);
    }
    outcome_memo_.emplace(std::move(key), wins);
    return wins;
  }

  void remember(std::string key, Nimber v) {
    if (memo_.count(key)) return;
    if (memo_size() >= budget_.max_memo_entries) {
      throw BudgetExceeded("memo table limit reached", nodes_);
    }
    memo_.emplace(std::move(key), v);
  }

  void count_node() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("node expansion limit reached", nodes_ - 1);
  }

  void reset_counters() {
    nodes_ = 0;
    max_depth_ = 0;
  }

  G game_;
  SolveBudget budget_;
  std::unordered_map<std::string, Nimber> memo_;
  std::unordered_map<std::string, bool> outcome_memo_;
  std::uint64_t nodes_ = 0;
  std::uint32_t max_depth_ = 0;
};

}  // namespace twave
