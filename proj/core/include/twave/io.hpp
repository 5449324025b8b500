#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twave/grid.hpp"
#include "twave/positions.hpp"

namespace twave {

enum class RulesetId {
  TransverseWave,
  CrosswiseAnd,
  CrosswiseOr,
  DemiQuantumBooleanNim,
  Nim,
  DemiQuantumNim,
  QuantumNim,
  AvoidTrue,
  NodeKayles,
  FriendCircle,
  DemographicInfluence,
  HypergraphNim,
};

std::string_view ruleset_name(RulesetId id);
std::optional<RulesetId> ruleset_from_name(std::string_view name);
const std::vector<RulesetId>& all_rulesets();

using Payload = std::variant<Grid, BooleanMatrix, NimPosition, Superposition, CnfPosition, UndirectedGraph,
                             FriendCirclePosition, InfluenceNetwork, HypergraphNimPosition>;

struct PositionDocument {
  static constexpr int kVersion = 1;

  RulesetId ruleset = RulesetId::TransverseWave;
  Payload payload;
  int version = kVersion;

  bool operator==(const PositionDocument&) const = default;
};

// Checks that the payload type belongs to the ruleset and validates it.
PositionDocument make_document(RulesetId ruleset, Payload payload);

// JSON document, or a bare G/P grid literal for Transverse Wave.
PositionDocument parse_position(std::string_view text);

// Canonical JSON: sorted keys, no whitespace.
std::string serialize_position(const PositionDocument& doc);

}  // namespace twave
