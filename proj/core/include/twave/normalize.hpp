#pragma once

#include <string>

#include "twave/grid.hpp"
#include "twave/positions.hpp"

namespace twave {

// Value-preserving reduction used as the memo key. For grids: drop all-purple
// rows, deduplicate rows, then alternately sort columns and rows by bit
// pattern until neither order changes.
Grid normalize(const Grid& g);
// Crosswise AND reads green as 1; Crosswise OR reads purple as 1.
BooleanMatrix normalize_and(const BooleanMatrix& b);
BooleanMatrix normalize_or(const BooleanMatrix& b);
// Deduplicated, sorted realizations.
Superposition normalize(const Superposition& s);

inline NimPosition normalize(const NimPosition& p) { return p; }
inline CnfPosition normalize(const CnfPosition& c) { return c; }
inline UndirectedGraph normalize(const UndirectedGraph& g) { return g; }
inline FriendCirclePosition normalize(const FriendCirclePosition& p) { return p; }
// Vertices below zero never bound a move and never turn newly negative, so
// they are deleted (threshold pinned to -1) along with their demographic
// memberships.
InfluenceNetwork normalize(const InfluenceNetwork& z);
inline HypergraphNimPosition normalize(const HypergraphNimPosition& h) { return h; }

// Compact serializations; equal keys mean equal positions of one ruleset.
std::string memo_key(const Grid& g);
std::string memo_key(const BooleanMatrix& b);
std::string memo_key(const NimPosition& p);
std::string memo_key(const Superposition& s);
std::string memo_key(const CnfPosition& c);
std::string memo_key(const UndirectedGraph& g);
std::string memo_key(const FriendCirclePosition& p);
std::string memo_key(const InfluenceNetwork& z);
std::string memo_key(const HypergraphNimPosition& h);

}  // namespace twave
