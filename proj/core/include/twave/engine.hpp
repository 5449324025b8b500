#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twave/io.hpp"
#include "twave/nimber.hpp"
#include "twave/solver.hpp"

namespace twave {

struct EngineOptions {
  bool extract_green_columns = false;
  std::uint32_t quantum_max_width = 0;
};

struct MoveOption {
  std::string move;
  PositionDocument successor;
};

struct SolveReport {
  Nimber grundy;
  OutcomeClass outcome = OutcomeClass::P;
  std::optional<std::string> best_move;
  std::uint64_t nodes_expanded = 0;
  std::uint32_t max_depth = 0;
};

struct OptionAnalysis {
  std::string move;
  std::optional<Nimber> grundy;  // absent when the budget ran out
};

// Runtime dispatch from a ruleset id to its typed rules and solver. The memo
// is kept between calls.
class Engine {
 public:
  explicit Engine(RulesetId ruleset, SolveBudget budget = {}, EngineOptions options = {});
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  RulesetId ruleset() const { return ruleset_; }

  std::vector<MoveOption> options(const PositionDocument& doc) const;
  std::vector<std::string> moves(const PositionDocument& doc) const;
  // Throws InfeasibleMove unless `move` matches a feasible option's rendering
  // (whitespace ignored).
  PositionDocument apply(const PositionDocument& doc, std::string_view move) const;

  SolveReport solve(const PositionDocument& doc);
  OutcomeClass outcome(const PositionDocument& doc);
  // Solves each option in turn; stops filling values once the budget runs out
  // and reports that through `exhausted`.
  std::vector<OptionAnalysis> analyse_options(const PositionDocument& doc, bool& exhausted);

  void clear_memo();

  struct Backend;

 private:
  RulesetId ruleset_;
  std::unique_ptr<Backend> backend_;
};

// Strips whitespace and maps the typographic forms of brackets and minus
// signs to ASCII.
std::string canonical_move_text(std::string_view move);

}  // namespace twave
