#include "sqgt/core.hpp"

#include <algorithm>
#include <numeric>

namespace sqgt {

Thresholds::Thresholds(std::vector<long long> values) : values_(std::move(values)) {
  if (values_.empty()) throw ParameterError("thresholds: need at least one value");
  long long prev = 0;
  for (long long v : values_) {
    if (v < 1) throw ParameterError("thresholds: values must be >= 1");
    if (v <= prev) throw ParameterError("thresholds: values must be strictly increasing");
    prev = v;
  }
}

Thresholds Thresholds::saturation(int s) {
  if (s < 1) throw ParameterError("saturation: s must be >= 1");
  std::vector<long long> v(s);
  std::iota(v.begin(), v.end(), 1);
  return Thresholds(std::move(v));
}

int quantize(long long count, const Thresholds& eta) {
  if (count < 0) throw ParameterError("quantize: count must be nonnegative");
  const auto& v = eta.values();
  return static_cast<int>(std::upper_bound(v.begin(), v.end(), count) - v.begin());
}

BinaryMatrix::BinaryMatrix(long long rows, long long cols) : rows_(rows), cols_(cols) {
  // rows == 0 is allowed for degenerate sub-matrices (e.g. an empty phase-1)
  if (rows < 0 || cols < 1) throw ParameterError("matrix: bad dimensions");
  if (cols > kMaxMatrixColumns) throw ParameterError("matrix: column count exceeds size cap");
  bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

void BinaryMatrix::set_row(long long r, std::span<const std::uint8_t> bits) {
  if (static_cast<long long>(bits.size()) != cols_)
    throw ParameterError("set_row: width mismatch");
  std::copy(bits.begin(), bits.end(),
            bits_.begin() + static_cast<std::size_t>(r * cols_));
}

BinaryMatrix BinaryMatrix::stacked(const BinaryMatrix& below) const {
  if (cols_ != below.cols_) throw ParameterError("stacked: column counts differ");
  BinaryMatrix out(rows_ + below.rows_, cols_);
  std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
  std::copy(below.bits_.begin(), below.bits_.end(),
            out.bits_.begin() + bits_.size());
  return out;
}

BinaryMatrix BinaryMatrix::left_columns(long long cols) const {
  if (cols < 1 || cols > cols_) throw ParameterError("left_columns: bad width");
  BinaryMatrix out(rows_, cols);
  for (long long r = 0; r < rows_; ++r)
    for (long long c = 0; c < cols; ++c) out.set(r, c, at(r, c));
  return out;
}

BinaryMatrix BinaryMatrix::row_range(long long begin, long long end) const {
  if (begin < 0 || end > rows_ || begin >= end) throw ParameterError("row_range: bad range");
  BinaryMatrix out(end - begin, cols_);
  for (long long r = begin; r < end; ++r) out.set_row(r - begin, row(r));
  return out;
}

std::vector<Burst> enumerate_bursts(long long n, const Mode& mode) {
  if (mode.ell < 1 || mode.ell > n) throw ParameterError("enumerate_bursts: need 1 <= ell <= n");
  std::vector<Burst> out;
  if (mode.kind == Mode::Kind::Fixed) {
    out.reserve(static_cast<std::size_t>(n - mode.ell + 1));
    for (long long h = 0; h + mode.ell <= n; ++h) out.push_back({h, mode.ell});
  } else {
    for (long long len = 1; len <= mode.ell; ++len)
      for (long long h = 0; h + len <= n; ++h) out.push_back({h, len});
  }
  return out;
}

OutcomeVector outcome(const BinaryMatrix& m, const Thresholds& eta, const Burst& b) {
  if (b.head < 0 || b.length < 1 || b.tail() >= m.cols())
    throw ParameterError("outcome: burst out of range");
  OutcomeVector levels(static_cast<std::size_t>(m.rows()));
  for (long long r = 0; r < m.rows(); ++r) {
    long long count = 0;
    auto row = m.row(r);
    for (long long j = b.head; j <= b.tail(); ++j) count += row[static_cast<std::size_t>(j)];
    levels[static_cast<std::size_t>(r)] = quantize(count, eta);
  }
  return levels;
}

std::vector<OutcomeVector> outcome_matrix(const BinaryMatrix& m, const Thresholds& eta,
                                          const Mode& mode) {
  const long long n = m.cols();
  if (mode.ell > n) throw ParameterError("outcome_matrix: ell > n");
  auto bursts = enumerate_bursts(n, mode);
  std::vector<OutcomeVector> cols(bursts.size(),
                                  OutcomeVector(static_cast<std::size_t>(m.rows())));
  // Sliding-window counts, one row at a time, restarting at each length.
  for (long long r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::size_t idx = 0;
    long long len = 0;
    long long count = 0;
    for (const Burst& b : bursts) {
      if (b.length != len || b.head == 0) {
        len = b.length;
        count = 0;
        for (long long j = 0; j < len; ++j) count += row[static_cast<std::size_t>(j)];
      } else {
        count += row[static_cast<std::size_t>(b.tail())] -
                 row[static_cast<std::size_t>(b.head - 1)];
      }
      cols[idx++][static_cast<std::size_t>(r)] = quantize(count, eta);
    }
  }
  return cols;
}

const ComponentRange& Scheme::component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return c;
  throw ParameterError("scheme: no component named " + name);
}

bool Scheme::has_component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return true;
  return false;
}

std::span<const int> Scheme::component_levels(const std::string& name,
                                              const OutcomeVector& levels) const {
  if (static_cast<long long>(levels.size()) != matrix.rows())
    throw InconsistentOutcomeError("outcome length does not match scheme rows");
  const auto& c = component(name);
  return {levels.data() + c.begin, static_cast<std::size_t>(c.end - c.begin)};
}

void Scheme::validate() const {
  if (matrix.cols() != n) throw ParameterError("scheme: matrix.cols != n");
  if (mode.ell < 1 || mode.ell > n) throw ParameterError("scheme: need 1 <= ell <= n");
  // Component ranges must partition [0, rows).
  long long expect = 0;
  for (const auto& c : components) {
    if (c.begin != expect || c.end < c.begin)
      throw ParameterError("scheme: component ranges must partition the rows in order");
    expect = c.end;
  }
  if (expect != matrix.rows())
    throw ParameterError("scheme: component ranges do not cover all rows");
}

}  // namespace sqgt
