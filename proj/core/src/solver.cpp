#include "twave/solver.hpp"

namespace twave {

void SolveBudget::validate() const {
  if (max_nodes == 0) throw InvalidArgument("max_nodes must be at least 1");
  if (max_memo_entries == 0) throw InvalidArgument("max_memo_entries must be at least 1");
}

Nimber game_sum_grundy(std::span<const Nimber> components) {
  Nimber total;
  for (auto c : components) total = total + c;
  return total;
}

}  // namespace twave
