// q-ary reflected Gray codes and the palindromic "paired" Gray code,
// with ranking/unranking and run counting.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqgt/core.hpp"

namespace sqgt {

// Largest code table (q^h or 2*q^h columns) a builder will materialize.
inline constexpr long long kMaxCodeColumns = 1LL << 22;

/// h x q^h digit matrix; row 0 is the slowest-varying digit.
struct GrayMatrix {
  int q = 2;
  int h = 1;
  std::vector<std::vector<int>> rows;  // digits in [0, q-1]

  long long ncols() const { return rows.empty() ? 0 : static_cast<long long>(rows[0].size()); }
  std::vector<int> column(long long j) const;
};

/// h x 2*q^h digit matrix; palindromic, every vector appears exactly twice,
/// columns 0..q^h-1 equal the reflected Gray code.
struct PairedGrayMatrix {
  int q = 2;
  int h = 1;
  std::vector<std::vector<int>> rows;

  long long ncols() const { return rows.empty() ? 0 : static_cast<long long>(rows[0].size()); }
  std::vector<int> column(long long j) const;
};

GrayMatrix gray_matrix(int q, int h);
PairedGrayMatrix paired_gray_matrix(int q, int h);

/// Column of the reflected Gray code at `rank`, without materializing the table.
std::vector<int> gray_column(int q, int h, long long rank);

/// Rank of a digit column in gray_matrix(q, column.size()); inverse of gray_column.
long long gray_index(int q, std::span<const int> column);

/// Maximal blocks of consecutive 1s (linear, non-cyclic).
int runs_of_ones(std::span<const std::uint8_t> row);

}  // namespace sqgt
