#include "twave/quantum_nim.hpp"

#include <algorithm>

#include "twave/error.hpp"

namespace twave {

namespace {

constexpr std::size_t kMaxClassicalMoves = 22;

}  // namespace

std::string render(const QuantumMove& m) {
  std::string out = "<";
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (i) out += '|';
    out += render(m.parts[i]);
  }
  return out + ">";
}

std::vector<Option<QuantumMove, Superposition>> qnim_options(const Superposition& s, std::uint32_t max_width) {
  const auto width = static_cast<std::uint32_t>(s.heap_count());
  std::vector<NimMove> classical;
  for (std::uint32_t i = 0; i < width; ++i) {
    std::uint32_t tallest = 0;
    for (const auto& r : s.realizations()) tallest = std::max(tallest, r.heaps[i]);
    for (std::uint32_t q = 1; q <= tallest; ++q) classical.push_back(NimMove{i, q, width});
  }
  if (classical.size() > kMaxClassicalMoves &&
      (max_width == 0 || max_width > 3)) {
    throw InvalidArgument("too many classical moves (" + std::to_string(classical.size()) +
                          ") for unbounded quantum width; lower max_width");
  }

  std::vector<Option<QuantumMove, Superposition>> out;
  std::vector<std::size_t> pick;
  // Depth-first over index sets in increasing order.
  auto emit = [&] {
    QuantumMove m;
    std::vector<NimPosition> next;
    for (auto idx : pick) {
      const auto& c = classical[idx];
      m.parts.push_back(c);
      for (const auto& r : s.realizations()) {
        if (r.heaps[c.heap] < c.amount) continue;
        NimPosition b = r;
        b.heaps[c.heap] -= c.amount;
        next.push_back(std::move(b));
      }
    }
    out.push_back({std::move(m), Superposition{std::move(next)}.canonical()});
  };
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < classical.size(); ++i) {
      pick.push_back(i);
      emit();
      if (max_width == 0 || pick.size() < max_width) self(self, i + 1);
      pick.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.move < b.move; });
  return out;
}

OutcomeClass qnim_outcome(const Superposition& s, const SolveBudget& budget, std::uint32_t max_width) {
  Solver<QuantumNim> solver(QuantumNim{max_width}, budget);
  return solver.outcome(s);
}

}  // namespace twave
