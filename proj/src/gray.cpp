#include "sqgt/gray.hpp"

#include <algorithm>

namespace sqgt {

namespace {

long long checked_pow(int q, int h, long long cap) {
  long long p = 1;
  for (int i = 0; i < h; ++i) {
    if (p > cap / q) throw ParameterError("gray: q^h exceeds size cap");
    p *= q;
  }
  return p;
}

void require_params(int q, int h) {
  if (q < 2) throw ParameterError("gray: q must be >= 2");
  if (h < 1) throw ParameterError("gray: h must be >= 1");
}

}  // namespace

std::vector<int> GrayMatrix::column(long long j) const {
  std::vector<int> c(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) c[r] = rows[r][static_cast<std::size_t>(j)];
  return c;
}

std::vector<int> PairedGrayMatrix::column(long long j) const {
  std::vector<int> c(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) c[r] = rows[r][static_cast<std::size_t>(j)];
  return c;
}

GrayMatrix gray_matrix(int q, int h) {
  require_params(q, h);
  checked_pow(q, h, kMaxCodeColumns);
  GrayMatrix g{q, h, {}};
  // Reflected construction: top row counts 0..q-1 over blocks; lower rows
  // repeat the previous code, reversed in every odd block.
  std::vector<std::vector<int>> prev;  // code for h-1 digits (empty at h=1)
  for (int level = 1; level <= h; ++level) {
    long long sub = 1;
    for (int i = 1; i < level; ++i) sub *= q;
    std::vector<std::vector<int>> cur(static_cast<std::size_t>(level));
    for (auto& r : cur) r.reserve(static_cast<std::size_t>(sub * q));
    for (int b = 0; b < q; ++b) {
      for (long long j = 0; j < sub; ++j) {
        long long src = (b % 2 == 0) ? j : sub - 1 - j;
        cur[0].push_back(b);
        for (int r = 1; r < level; ++r)
          cur[static_cast<std::size_t>(r)].push_back(
              prev[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(src)]);
      }
    }
    prev = std::move(cur);
  }
  g.rows = std::move(prev);
  return g;
}

PairedGrayMatrix paired_gray_matrix(int q, int h) {
  require_params(q, h);
  checked_pow(q, h, kMaxCodeColumns / 2);
  PairedGrayMatrix p{q, h, {}};
  // P(1) = [0..q-1, q-1..0]; P(i) stacks that pattern (each digit repeated
  // q^{i-1} times) over q copies of P(i-1).
  std::vector<std::vector<int>> rows;
  {
    std::vector<int> base;
    for (int d = 0; d < q; ++d) base.push_back(d);
    for (int d = q - 1; d >= 0; --d) base.push_back(d);
    rows.push_back(std::move(base));
  }
  long long rep = 1;
  for (int level = 2; level <= h; ++level) {
    rep *= q;
    std::vector<std::vector<int>> next;
    std::vector<int> top;
    top.reserve(static_cast<std::size_t>(2 * q * rep));
    for (int d = 0; d < q; ++d) top.insert(top.end(), static_cast<std::size_t>(rep), d);
    for (int d = q - 1; d >= 0; --d) top.insert(top.end(), static_cast<std::size_t>(rep), d);
    next.push_back(std::move(top));
    for (const auto& r : rows) {
      std::vector<int> tiled;
      tiled.reserve(r.size() * static_cast<std::size_t>(q));
      for (int k = 0; k < q; ++k) tiled.insert(tiled.end(), r.begin(), r.end());
      next.push_back(std::move(tiled));
    }
    rows = std::move(next);
  }
  p.rows = std::move(rows);
  return p;
}

std::vector<int> gray_column(int q, int h, long long rank) {
  require_params(q, h);
  // ranking functions never materialize the table; only guard overflow
  long long size = checked_pow(q, h, 1LL << 62);
  if (rank < 0 || rank >= size) throw ParameterError("gray_column: rank out of range");
  std::vector<int> col(static_cast<std::size_t>(h));
  long long sub = size;
  long long pos = rank;
  for (int r = 0; r < h; ++r) {
    sub /= q;
    long long b = pos / sub;
    pos %= sub;
    col[static_cast<std::size_t>(r)] = static_cast<int>(b);
    // odd blocks hold the reversed sub-code
    if (b % 2 == 1) pos = sub - 1 - pos;
  }
  return col;
}

long long gray_index(int q, std::span<const int> column) {
  if (q < 2) throw ParameterError("gray_index: q must be >= 2");
  if (column.empty()) throw ParameterError("gray_index: empty column");
  const int h = static_cast<int>(column.size());
  checked_pow(q, h, 1LL << 62);
  for (int g : column)
    if (g < 0 || g >= q) throw ParameterError("gray_index: digit out of range");
  // Invert the recursion bottom-up: rank within the suffix code grows into
  // the rank within the full code one digit at a time.
  long long rank = 0;
  long long sub = 1;  // q^(digits below current row)
  for (int r = h - 1; r >= 0; --r) {
    long long b = column[static_cast<std::size_t>(r)];
    rank = b * sub + (b % 2 == 0 ? rank : sub - 1 - rank);
    sub *= q;
  }
  return rank;
}

int runs_of_ones(std::span<const std::uint8_t> row) {
  int runs = 0;
  std::uint8_t prev = 0;
  for (std::uint8_t b : row) {
    if (b && !prev) ++runs;
    prev = b;
  }
  return runs;
}

}  // namespace sqgt
