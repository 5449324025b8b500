#include "twave/normalize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace twave {

namespace {

void sort_unique(std::vector<std::uint64_t>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// Column order by pattern read top-to-bottom, set bits first.
std::vector<std::uint32_t> column_order(const std::vector<std::uint64_t>& rows, std::size_t cols) {
  std::vector<std::uint32_t> order(cols);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    for (auto r : rows) {
      const bool x = (r >> a) & 1U;
      const bool y = (r >> b) & 1U;
      if (x != y) return x;
    }
    return false;
  });
  return order;
}

std::vector<std::uint64_t> permute_columns(const std::vector<std::uint64_t>& rows,
                                           const std::vector<std::uint32_t>& order) {
  std::vector<std::uint64_t> out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      if ((rows[i] >> order[k]) & 1U) out[i] |= 1ULL << k;
    }
  }
  return out;
}

// `absorbing` rows are inert under the move rule and are removed.
BitRows normalize_bits(const BitRows& bits, std::uint64_t absorbing) {
  std::vector<std::uint64_t> rows;
  rows.reserve(bits.rows());
  for (auto r : bits.masks()) {
    if (r != absorbing) rows.push_back(r);
  }
  sort_unique(rows);
  // Each pass is a permutation, so a capped loop is still value-preserving.
  for (int pass = 0; pass < 64; ++pass) {
    auto order = column_order(rows, bits.cols());
    if (std::is_sorted(order.begin(), order.end())) break;
    rows = permute_columns(rows, order);
    std::sort(rows.begin(), rows.end());
  }
  return BitRows{std::move(rows), bits.cols()};
}

void append_number(std::string& out, std::uint64_t v) {
  out += std::to_string(v);
  out += ',';
}

void append_signed(std::string& out, std::int64_t v) {
  out += std::to_string(v);
  out += ',';
}

void append_hex(std::string& out, std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  do {
    out += digits[v & 0xF];
    v >>= 4;
  } while (v);
  out += ',';
}

std::string bits_key(char tag, const BitRows& b) {
  std::string out(1, tag);
  append_number(out, b.cols());
  for (auto r : b.masks()) append_hex(out, r);
  return out;
}

}  // namespace

Grid normalize(const Grid& g) { return Grid{normalize_bits(g.purple(), g.full_mask())}; }

BooleanMatrix normalize_and(const BooleanMatrix& b) {
  // Green is 1, so run the grid normalizer on the complement.
  return BooleanMatrix{normalize_bits(b.bits().complement(), b.full_mask()).complement()};
}

BooleanMatrix normalize_or(const BooleanMatrix& b) { return BooleanMatrix{normalize_bits(b.bits(), b.full_mask())}; }

Superposition normalize(const Superposition& s) { return s.canonical(); }

std::string memo_key(const Grid& g) { return bits_key('g', g.purple()); }

std::string memo_key(const BooleanMatrix& b) { return bits_key('b', b.bits()); }

std::string memo_key(const NimPosition& p) {
  std::string out = "n";
  for (auto h : p.heaps) append_number(out, h);
  return out;
}

std::string memo_key(const Superposition& s) {
  std::string out = "s";
  append_number(out, s.heap_count());
  for (const auto& r : s.realizations()) {
    for (auto h : r.heaps) append_number(out, h);
    out += ';';
  }
  return out;
}

std::string memo_key(const CnfPosition& c) {
  std::string out = "c";
  append_number(out, c.var_count);
  append_hex(out, c.true_set);
  for (auto clause : c.clauses) append_hex(out, clause);
  return out;
}

std::string memo_key(const UndirectedGraph& g) {
  std::string out = "u";
  append_number(out, g.vertex_count());
  append_hex(out, g.vertices());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (g.contains(v)) append_hex(out, g.neighbors(v));
  }
  return out;
}

std::string memo_key(const FriendCirclePosition& p) {
  std::string out = "f" + memo_key(p.graph);
  append_hex(out, p.seeds);
  for (auto t : p.true_adjacency) append_hex(out, t);
  return out;
}

InfluenceNetwork normalize(const InfluenceNetwork& z) {
  std::uint64_t inert = 0;
  for (std::uint32_t v = 0; v < z.theta.size(); ++v) {
    if (z.theta[v] < 0) inert |= 1ULL << v;
  }
  if (!inert) return z;
  InfluenceNetwork out = z;
  out.graph.remove_vertices(inert);
  for (std::uint32_t v = 0; v < out.theta.size(); ++v) {
    if (inert >> v & 1) out.theta[v] = -1;
  }
  for (auto& d : out.demographics) d &= ~inert;
  return out;
}

std::string memo_key(const InfluenceNetwork& z) {
  std::string out = "d" + memo_key(z.graph);
  for (auto t : z.theta) append_signed(out, t);
  out += '|';
  for (auto d : z.demographics) append_hex(out, d);
  return out;
}

std::string memo_key(const HypergraphNimPosition& h) {
  std::string out = "h";
  append_number(out, h.vertex_count);
  append_number(out, h.current);
  append_hex(out, h.pebbles);
  for (auto e : h.hyperedges) append_hex(out, e);
  return out;
}

}  // namespace twave
