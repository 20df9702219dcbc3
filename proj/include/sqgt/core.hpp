// Core domain types for semiquantitative group testing (SQGT) over
// bursts of consecutive positives: thresholds, bursts, 0/1 measurement
// matrices, and quantized outcome computation.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqgt {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentOutcomeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line(line) {}
  int line;
};

/// Strictly increasing positive test-count thresholds eta_1 < ... < eta_s.
class Thresholds {
 public:
  explicit Thresholds(std::vector<long long> values);

  /// Saturation thresholds (1, 2, ..., s): outcome = min(count, s).
  static Thresholds saturation(int s);

  int s() const { return static_cast<int>(values_.size()); }
  long long largest() const { return values_.back(); }
  const std::vector<long long>& values() const { return values_; }

  bool operator==(const Thresholds&) const = default;

 private:
  std::vector<long long> values_;
};

/// Number of thresholds not exceeding `count`; a level in [0, s].
int quantize(long long count, const Thresholds& eta);

/// A contiguous run of positives: items head, head+1, ..., head+length-1.
struct Burst {
  long long head = 0;
  long long length = 1;

  long long tail() const { return head + length - 1; }
  bool operator==(const Burst&) const = default;
  auto operator<=>(const Burst&) const = default;
};

/// Row-major 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(long long rows, long long cols);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }

  std::uint8_t at(long long r, long long c) const {
    return bits_[static_cast<std::size_t>(r * cols_ + c)];
  }
  void set(long long r, long long c, std::uint8_t v) {
    bits_[static_cast<std::size_t>(r * cols_ + c)] = v;
  }
  std::span<const std::uint8_t> row(long long r) const {
    return {bits_.data() + static_cast<std::size_t>(r * cols_), static_cast<std::size_t>(cols_)};
  }
  void set_row(long long r, std::span<const std::uint8_t> bits);

  /// Vertical stack: this on top of `below` (column counts must match).
  BinaryMatrix stacked(const BinaryMatrix& below) const;
  /// Leftmost `cols` columns.
  BinaryMatrix left_columns(long long cols) const;
  /// Rows [begin, end).
  BinaryMatrix row_range(long long begin, long long end) const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  long long rows_ = 0;
  long long cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Constructions refuse to materialize anything wider than this.
inline constexpr long long kMaxMatrixColumns = 1LL << 26;

/// One quantized level per matrix row.
using OutcomeVector = std::vector<int>;

struct Mode {
  enum class Kind { Fixed, Bounded };
  Kind kind = Kind::Fixed;
  long long ell = 1;

  static Mode fixed(long long ell) { return {Kind::Fixed, ell}; }
  static Mode bounded(long long ell) { return {Kind::Bounded, ell}; }
  bool operator==(const Mode&) const = default;
};

/// Canonical burst order: fixed -> heads ascending; bounded ->
/// length-major (lengths 1..ell), heads ascending within a length.
std::vector<Burst> enumerate_bursts(long long n, const Mode& mode);

/// Quantized outcome of one burst.
OutcomeVector outcome(const BinaryMatrix& m, const Thresholds& eta, const Burst& b);

/// Outcome columns for every burst in canonical order (see enumerate_bursts).
std::vector<OutcomeVector> outcome_matrix(const BinaryMatrix& m, const Thresholds& eta,
                                          const Mode& mode);

struct ComponentRange {
  std::string name;  // sketch | refine | phase1 | phase2 | integer
  long long begin = 0;
  long long end = 0;  // half-open [begin, end)
  bool operator==(const ComponentRange&) const = default;
};

/// A measurement matrix plus everything needed to simulate and decode.
struct Scheme {
  BinaryMatrix matrix;
  Thresholds thresholds;
  long long n = 0;
  Mode mode;
  std::vector<ComponentRange> components;
  std::vector<std::string> notes;  // build report: deviations, unverified-beyond-cap markers

  const ComponentRange& component(const std::string& name) const;
  bool has_component(const std::string& name) const;
  /// Slice of an outcome vector covering one component's rows.
  std::span<const int> component_levels(const std::string& name,
                                        const OutcomeVector& levels) const;
  void validate() const;
};

}  // namespace sqgt
