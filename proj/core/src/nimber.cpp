#include "twave/nimber.hpp"

#include <vector>

#include "twave/error.hpp"

namespace twave {

Nimber mex(std::span<const Nimber> values) {
  // Any mex is at most |values|, so a bitmap of that size suffices.
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values) {
    if (v.value() < seen.size()) seen[v.value()] = true;
  }
  std::uint32_t m = 0;
  while (seen[m]) ++m;
  return Nimber{m};
}

Nimber parse_nimber(const std::string& text) {
  if (text == "0") return Nimber{0};
  if (text == "*") return Nimber{1};
  if (text.size() < 2 || text[0] != '*') throw ParseError("not a nimber: '" + text + "'");
  std::uint32_t v = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("not a nimber: '" + text + "'");
    v = v * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return Nimber{v};
}

}  // namespace twave
