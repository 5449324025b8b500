#include "twave/closed_form.hpp"

#include <array>
#include <bit>
#include <string>
#include <vector>

#include "twave/error.hpp"

namespace twave {

std::optional<TriangleParams> triangle_recognize(const Grid& g) {
  const std::uint64_t full = g.full_mask();
  std::vector<std::uint64_t> rows;
  for (auto r : g.purple().masks()) {
    if (r != full) rows.push_back(r);
  }
  if (rows.empty()) return TriangleParams{};

  std::uint64_t any = 0;
  std::uint64_t all = full;
  for (auto r : rows) {
    any |= r;
    all &= r;
  }
  const std::uint64_t selectable = full & ~all;
  const std::uint64_t all_green = full & ~any;

  std::uint64_t seen = 0;
  TriangleParams t;
  for (auto r : rows) {
    const std::uint64_t live = r & selectable;
    if (live == 0) return std::nullopt;
    if (live & seen) return std::nullopt;
    seen |= live;
    ++t.p;
    if (std::popcount(live) & 1) ++t.k;
  }
  t.q = static_cast<std::uint32_t>(std::popcount(all_green) & 1);
  return t;
}

Nimber triangle_value(const TriangleParams& t) {
  Nimber base;
  if (t.p != 0) {
    const std::uint64_t twice_k = 2ULL * t.k;
    const bool k_even = t.k % 2 == 0;
    if (t.p == twice_k) {
      base = Nimber{2};
    } else if ((t.p > twice_k) == k_even) {
      base = Nimber{0};
    } else {
      base = Nimber{1};
    }
  }
  return base + Nimber{t.q & 1U};
}

Grid triangle_position(std::uint32_t p, std::uint32_t k, std::uint32_t extra_green_columns) {
  if (k > p) throw InvalidArgument("triangle_position: k must not exceed p");
  const std::size_t cols = 2ULL * (p - k) + k + extra_green_columns;
  if (cols > BitRows::kMaxColumns) throw InvalidArgument("triangle_position: more than 64 columns");
  std::vector<std::uint64_t> rows;
  std::size_t next = 0;
  for (std::uint32_t i = 0; i < p - k; ++i) {
    rows.push_back(3ULL << next);
    next += 2;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    rows.push_back(1ULL << next);
    ++next;
  }
  // Without purple rows the extra columns need a row to be playable.
  if (p == 0 && extra_green_columns > 0) rows.push_back(0);
  return Grid{BitRows{std::move(rows), cols}};
}

namespace {

struct Witness {
  std::vector<std::vector<int>> rows;
  std::size_t cols;
};

const std::array<Witness, 8>& witnesses() {
  static const std::array<Witness, 8> table{{
      {{{0}}, 1},
      {{{0}, {0, 1}}, 2},
      {{{0, 1}, {2}}, 3},
      {{{0, 1}, {2}}, 4},
      {{{0, 1}, {2, 3, 4}, {0, 3, 5}}, 6},
      {{{0, 1}, {2, 3, 4}, {0, 3, 5}}, 7},
      {{{0, 1, 2}, {0, 3, 4}, {0, 1, 5, 6}, {2, 5, 7, 8}}, 9},
      {{{0, 1, 2}, {0, 3, 4}, {0, 1, 5, 6}, {2, 5, 7, 8}}, 10},
  }};
  return table;
}

}  // namespace

Grid witness_position(std::uint32_t k) {
  if (k > 7) throw InvalidArgument("witness_position: k must be at most 7");
  const auto& w = witnesses()[k];
  std::vector<std::uint64_t> rows;
  for (const auto& cells : w.rows) {
    std::uint64_t mask = 0;
    for (int c : cells) mask |= 1ULL << c;
    rows.push_back(mask);
  }
  return Grid{BitRows{std::move(rows), w.cols}};
}

}  // namespace twave
