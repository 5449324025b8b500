#include "twave/games.hpp"

#include <bit>

namespace twave {

std::pair<Grid, Nimber> TransverseWave::split(const Grid& g) const {
  if (!extract_green_columns || g.rows() == 0) return {g, Nimber{0}};
  const std::uint64_t green = g.full_mask() & ~g.purple().any_mask();
  if (green == 0) return {g, Nimber{0}};
  // Compact the remaining columns, preserving order.
  std::vector<std::uint64_t> rows;
  rows.reserve(g.rows());
  for (auto r : g.purple().masks()) {
    std::uint64_t out = 0;
    std::size_t k = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if ((green >> j) & 1U) continue;
      if ((r >> j) & 1U) out |= 1ULL << k;
      ++k;
    }
    rows.push_back(out);
  }
  const auto kept = g.cols() - static_cast<std::size_t>(std::popcount(green));
  return {Grid{BitRows{std::move(rows), kept}}, Nimber{static_cast<std::uint32_t>(std::popcount(green) & 1)}};
}

}  // namespace twave
