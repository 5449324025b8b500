#include "twave/grid.hpp"

#include <bit>

#include "twave/error.hpp"

namespace twave {

namespace {

void check_cols(std::size_t cols) {
  if (cols > BitRows::kMaxColumns) {
    throw ValidationError("at most " + std::to_string(BitRows::kMaxColumns) + " columns supported, got " +
                          std::to_string(cols));
  }
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Shared literal reader: `one` is the symbol for a set bit, `zero` for a clear bit.
BitRows parse_bit_rows(std::string_view literal, char zero, char one) {
  literal = trim(literal);
  std::vector<std::uint64_t> masks;
  if (literal.empty()) return BitRows{};
  std::size_t cols = 0;
  std::size_t row = 1;
  std::size_t col = 0;
  std::uint64_t mask = 0;
  auto finish_row = [&](std::size_t column_for_error) {
    if (row == 1) {
      if (col == 0) throw ParseError("empty row", row, column_for_error);
      check_cols(col);
      cols = col;
    } else if (col != cols) {
      throw ParseError("row has " + std::to_string(col) + " cells, expected " + std::to_string(cols), row,
                       column_for_error);
    }
    masks.push_back(mask);
    mask = 0;
    col = 0;
    ++row;
  };
  for (std::size_t i = 0; i < literal.size(); ++i) {
    char c = literal[i];
    if (c == '\r') continue;
    if (c == '/' || c == '\n') {
      finish_row(col + 1);
      continue;
    }
    if (c != zero && c != one) {
      throw ParseError(std::string("illegal character '") + c + "', expected '" + zero + "' or '" + one + "'", row,
                       col + 1);
    }
    if (col >= BitRows::kMaxColumns || (row > 1 && col >= cols)) {
      throw ParseError("row is longer than " + std::to_string(row > 1 ? cols : BitRows::kMaxColumns) + " cells", row,
                       col + 1);
    }
    if (c == one) mask |= 1ULL << col;
    ++col;
  }
  finish_row(col + 1);
  return BitRows{std::move(masks), cols};
}

std::vector<std::string> bit_row_strings(const BitRows& bits, char zero, char one) {
  std::vector<std::string> out;
  out.reserve(bits.rows());
  for (std::size_t i = 0; i < bits.rows(); ++i) {
    std::string s(bits.cols(), zero);
    for (std::size_t j = 0; j < bits.cols(); ++j) {
      if (bits.bit(i, j)) s[j] = one;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string join_rows(const std::vector<std::string>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '/';
    out += rows[i];
  }
  return out;
}

}  // namespace

BitRows::BitRows(std::size_t rows, std::size_t cols, bool fill) : cols_(cols) {
  check_cols(cols);
  masks_.assign(rows, fill ? full_mask() : 0);
}

BitRows::BitRows(std::vector<std::uint64_t> masks, std::size_t cols) : cols_(cols), masks_(std::move(masks)) {
  check_cols(cols);
  for (auto& m : masks_) m &= full_mask();
}

void BitRows::set_bit(std::size_t i, std::size_t j, bool value) {
  if (value) {
    masks_[i] |= 1ULL << j;
  } else {
    masks_[i] &= ~(1ULL << j);
  }
}

std::uint64_t BitRows::any_mask() const {
  std::uint64_t m = 0;
  for (auto r : masks_) m |= r;
  return m;
}

std::uint64_t BitRows::all_mask() const {
  std::uint64_t m = full_mask();
  for (auto r : masks_) m &= r;
  return m;
}

std::size_t BitRows::popcount() const {
  std::size_t n = 0;
  for (auto r : masks_) n += static_cast<std::size_t>(std::popcount(r));
  return n;
}

BitRows BitRows::complement() const {
  BitRows out = *this;
  for (auto& r : out.masks_) r = ~r & full_mask();
  return out;
}

Grid::Grid(std::size_t rows, std::size_t cols, Color fill) : purple_(rows, cols, fill == Color::Purple) {}

Grid Grid::parse(std::string_view literal) { return Grid{parse_bit_rows(literal, 'G', 'P')}; }

std::vector<std::string> Grid::row_strings() const { return bit_row_strings(purple_, 'G', 'P'); }

std::string Grid::to_literal() const { return join_rows(row_strings()); }

BooleanMatrix BooleanMatrix::parse(std::string_view literal) {
  return BooleanMatrix{parse_bit_rows(literal, '0', '1')};
}

std::vector<std::string> BooleanMatrix::row_strings() const { return bit_row_strings(bits_, '0', '1'); }

std::string BooleanMatrix::to_literal() const { return join_rows(row_strings()); }

}  // namespace twave
