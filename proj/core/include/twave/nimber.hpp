#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>

namespace twave {

// Grundy value *k of an impartial game. *0 is a previous-player win.
class Nimber {
 public:
  constexpr Nimber() = default;
  constexpr explicit Nimber(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  constexpr auto operator<=>(const Nimber&) const = default;

  std::string to_string() const { return "*" + std::to_string(value_); }

 private:
  std::uint32_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Nimber n) { return os << n.to_string(); }

// Nim-sum: the value of a disjunctive sum of two components.
constexpr Nimber nimber_add(Nimber a, Nimber b) { return Nimber{a.value() ^ b.value()}; }
constexpr Nimber operator+(Nimber a, Nimber b) { return nimber_add(a, b); }

// Least non-negative integer absent from `values`. Duplicates are fine.
Nimber mex(std::span<const Nimber> values);
inline Nimber mex(std::initializer_list<Nimber> values) {
  return mex(std::span<const Nimber>(values.begin(), values.size()));
}

enum class OutcomeClass : std::uint8_t { P, N };

constexpr OutcomeClass outcome_of(Nimber n) { return n.is_zero() ? OutcomeClass::P : OutcomeClass::N; }

inline const char* to_string(OutcomeClass o) { return o == OutcomeClass::N ? "N" : "P"; }
inline std::ostream& operator<<(std::ostream& os, OutcomeClass o) { return os << to_string(o); }

// Parses "*k" (also accepts "0" and "*" as *0 and *1, the usual shorthand).
Nimber parse_nimber(const std::string& text);

}  // namespace twave
