#pragma once

#include <cstdint>
#include <optional>

#include "twave/grid.hpp"
#include "twave/nimber.hpp"

namespace twave {

// p: rows holding purple, k: rows with an odd purple count, q: parity of the
// all-green column count.
struct TriangleParams {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;

  auto operator<=>(const TriangleParams&) const = default;
};

// Recognizes grids in which (ignoring all-purple rows and columns that are
// already purple in every remaining row) every row holds a purple cell and
// every selectable column holds at most one purple cell.
std::optional<TriangleParams> triangle_recognize(const Grid& g);

Nimber triangle_value(const TriangleParams& t);

// p-k rows with two purple cells, then k rows with one, all in distinct
// columns, followed by `extra_green_columns` all-green columns. For p = 0 the
// grid is a single all-green row (or empty).
Grid triangle_position(std::uint32_t p, std::uint32_t k, std::uint32_t extra_green_columns);

// Grid of value *k for k in 0..7.
Grid witness_position(std::uint32_t k);

}  // namespace twave
