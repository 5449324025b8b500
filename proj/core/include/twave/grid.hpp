#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twave {

enum class Color : std::uint8_t { Green, Purple };

// Row-major bitboard shared by Grid and BooleanMatrix: one 64-bit mask per
// row, bit j set for column j. Column count is capped at 64.
class BitRows {
 public:
  static constexpr std::size_t kMaxColumns = 64;

  BitRows() = default;
  BitRows(std::size_t rows, std::size_t cols, bool fill = false);
  BitRows(std::vector<std::uint64_t> masks, std::size_t cols);

  std::size_t rows() const { return masks_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint64_t full_mask() const { return cols_ == 64 ? ~0ULL : ((1ULL << cols_) - 1); }

  bool bit(std::size_t i, std::size_t j) const { return (masks_[i] >> j) & 1U; }
  void set_bit(std::size_t i, std::size_t j, bool value);
  std::uint64_t mask(std::size_t i) const { return masks_[i]; }
  const std::vector<std::uint64_t>& masks() const { return masks_; }

  // OR of every row.
  std::uint64_t any_mask() const;
  // AND of every row (full mask for an empty matrix).
  std::uint64_t all_mask() const;

  std::size_t popcount() const;
  BitRows complement() const;

  auto operator<=>(const BitRows&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> masks_;
};

// Transverse Wave board. Cells are green or purple; the mask marks purple.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, Color fill = Color::Green);
  explicit Grid(BitRows purple) : purple_(std::move(purple)) {}

  // Rows top-to-bottom over {G,P}, separated by '/' or newlines.
  static Grid parse(std::string_view literal);
  std::string to_literal() const;
  std::vector<std::string> row_strings() const;

  std::size_t rows() const { return purple_.rows(); }
  std::size_t cols() const { return purple_.cols(); }
  Color at(std::size_t i, std::size_t j) const {
    return purple_.bit(i, j) ? Color::Purple : Color::Green;
  }
  bool is_purple(std::size_t i, std::size_t j) const { return purple_.bit(i, j); }
  void set(std::size_t i, std::size_t j, Color c) { purple_.set_bit(i, j, c == Color::Purple); }

  std::uint64_t purple_row(std::size_t i) const { return purple_.mask(i); }
  const BitRows& purple() const { return purple_; }
  std::uint64_t full_mask() const { return purple_.full_mask(); }

  // Columns holding at least one green cell: the feasible moves.
  std::uint64_t columns_with_green() const { return ~purple_.all_mask() & full_mask(); }
  std::size_t purple_count() const { return purple_.popcount(); }

  auto operator<=>(const Grid&) const = default;

 private:
  BitRows purple_;
};

// 0/1 matrix for Crosswise AND/OR and Demi-Quantum Boolean Nim.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  BooleanMatrix(std::size_t rows, std::size_t cols, bool fill = false) : bits_(rows, cols, fill) {}
  explicit BooleanMatrix(BitRows bits) : bits_(std::move(bits)) {}

  // Rows over {0,1}, separated by '/' or newlines.
  static BooleanMatrix parse(std::string_view literal);
  std::string to_literal() const;
  std::vector<std::string> row_strings() const;

  std::size_t rows() const { return bits_.rows(); }
  std::size_t cols() const { return bits_.cols(); }
  bool at(std::size_t i, std::size_t j) const { return bits_.bit(i, j); }
  void set(std::size_t i, std::size_t j, bool v) { bits_.set_bit(i, j, v); }
  std::uint64_t row(std::size_t i) const { return bits_.mask(i); }
  const BitRows& bits() const { return bits_; }
  std::uint64_t full_mask() const { return bits_.full_mask(); }

  BooleanMatrix complement() const { return BooleanMatrix{bits_.complement()}; }

  auto operator<=>(const BooleanMatrix&) const = default;

 private:
  BitRows bits_;
};

}  // namespace twave
