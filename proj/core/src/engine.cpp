#include "twave/engine.hpp"

#include <cctype>

#include "twave/error.hpp"
#include "twave/quantum_nim.hpp"

namespace twave {

struct Engine::Backend {
  virtual ~Backend() = default;
  virtual std::vector<MoveOption> options(const PositionDocument& doc) const = 0;
  virtual SolveReport solve(const PositionDocument& doc) = 0;
  virtual OutcomeClass outcome(const PositionDocument& doc) = 0;
  virtual std::optional<Nimber> value(const PositionDocument& doc) = 0;
  virtual void clear() = 0;
};

namespace {

template <GameRules G>
class TypedBackend final : public Engine::Backend {
 public:
  TypedBackend(RulesetId id, G game, SolveBudget budget) : id_(id), solver_(std::move(game), budget) {}

  std::vector<MoveOption> options(const PositionDocument& doc) const override {
    std::vector<MoveOption> out;
    for (auto& o : solver_.game().options(position(doc))) {
      out.push_back({render(o.move), PositionDocument{id_, std::move(o.position), PositionDocument::kVersion}});
    }
    return out;
  }

  SolveReport solve(const PositionDocument& doc) override {
    auto r = solver_.solve(position(doc));
    SolveReport out;
    out.grundy = r.grundy;
    out.outcome = r.outcome;
    if (r.best_move) out.best_move = render(*r.best_move);
    out.nodes_expanded = r.nodes_expanded;
    out.max_depth = r.max_depth;
    return out;
  }

  OutcomeClass outcome(const PositionDocument& doc) override { return solver_.outcome(position(doc)); }

  std::optional<Nimber> value(const PositionDocument& doc) override {
    try {
      return solver_.grundy(position(doc));
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  }

  void clear() override { solver_.clear(); }

 private:
  const typename G::Position& position(const PositionDocument& doc) const {
    if (doc.ruleset != id_) {
      throw ValidationError("engine for " + std::string(ruleset_name(id_)) + " given a " +
                            std::string(ruleset_name(doc.ruleset)) + " position");
    }
    const auto* p = std::get_if<typename G::Position>(&doc.payload);
    if (!p) throw ValidationError("payload type does not match ruleset");
    return *p;
  }

  RulesetId id_;
  mutable Solver<G> solver_;
};

std::unique_ptr<Engine::Backend> make_backend(RulesetId id, const SolveBudget& b, const EngineOptions& o) {
  switch (id) {
    case RulesetId::TransverseWave: {
      TransverseWave game;
      game.extract_green_columns = o.extract_green_columns;
      return std::make_unique<TypedBackend<TransverseWave>>(id, game, b);
    }
    case RulesetId::CrosswiseAnd: return std::make_unique<TypedBackend<CrosswiseAnd>>(id, CrosswiseAnd{}, b);
    case RulesetId::CrosswiseOr: return std::make_unique<TypedBackend<CrosswiseOr>>(id, CrosswiseOr{}, b);
    case RulesetId::DemiQuantumBooleanNim:
      return std::make_unique<TypedBackend<DemiQuantumBooleanNim>>(id, DemiQuantumBooleanNim{}, b);
    case RulesetId::Nim: return std::make_unique<TypedBackend<Nim>>(id, Nim{}, b);
    case RulesetId::DemiQuantumNim: return std::make_unique<TypedBackend<DemiQuantumNim>>(id, DemiQuantumNim{}, b);
    case RulesetId::QuantumNim:
      return std::make_unique<TypedBackend<QuantumNim>>(id, QuantumNim{o.quantum_max_width}, b);
    case RulesetId::AvoidTrue: return std::make_unique<TypedBackend<AvoidTrue>>(id, AvoidTrue{}, b);
    case RulesetId::NodeKayles: return std::make_unique<TypedBackend<NodeKayles>>(id, NodeKayles{}, b);
    case RulesetId::FriendCircle: return std::make_unique<TypedBackend<FriendCircle>>(id, FriendCircle{}, b);
    case RulesetId::DemographicInfluence:
      return std::make_unique<TypedBackend<DemographicInfluence>>(id, DemographicInfluence{}, b);
    case RulesetId::HypergraphNim: return std::make_unique<TypedBackend<HypergraphNim>>(id, HypergraphNim{}, b);
  }
  throw InvalidArgument("unknown ruleset");
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

std::string canonical_move_text(std::string_view move) {
  std::string out;
  for (char c : move) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  replace_all(out, "⟨", "<");
  replace_all(out, "⟩", ">");
  replace_all(out, "−", "-");
  return out;
}

Engine::Engine(RulesetId ruleset, SolveBudget budget, EngineOptions options)
    : ruleset_(ruleset), backend_(make_backend(ruleset, budget, options)) {
  budget.validate();
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

std::vector<MoveOption> Engine::options(const PositionDocument& doc) const { return backend_->options(doc); }

std::vector<std::string> Engine::moves(const PositionDocument& doc) const {
  std::vector<std::string> out;
  for (const auto& o : options(doc)) out.push_back(o.move);
  return out;
}

PositionDocument Engine::apply(const PositionDocument& doc, std::string_view move) const {
  std::string wanted = canonical_move_text(move);
  if (ruleset_ == RulesetId::QuantumNim && !wanted.empty() && wanted.front() != '<') wanted = "<" + wanted + ">";
  for (auto& o : options(doc)) {
    if (o.move == wanted) return std::move(o.successor);
  }
  throw InfeasibleMove("move \"" + std::string(move) + "\" is not feasible");
}

SolveReport Engine::solve(const PositionDocument& doc) { return backend_->solve(doc); }

OutcomeClass Engine::outcome(const PositionDocument& doc) { return backend_->outcome(doc); }

std::vector<OptionAnalysis> Engine::analyse_options(const PositionDocument& doc, bool& exhausted) {
  exhausted = false;
  std::vector<OptionAnalysis> out;
  for (const auto& o : options(doc)) {
    OptionAnalysis a{o.move, std::nullopt};
    if (!exhausted) {
      a.grundy = backend_->value(o.successor);
      if (!a.grundy) exhausted = true;
    }
    out.push_back(std::move(a));
  }
  return out;
}

void Engine::clear_memo() { backend_->clear(); }

}  // namespace twave
