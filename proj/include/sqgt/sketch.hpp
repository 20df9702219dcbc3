// The sketch matrix K: staircase m(c) patterns whose fixed-length burst
// outcomes sweep 0..s..0, the saturated recursion rec(i), the truncated
// general recursion rec'(i), and K assembly with build-time verification.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqgt/core.hpp"
#include "sqgt/oracle.hpp"

namespace sqgt {

// Exhaustive build-time verification is mandatory up to this many columns.
inline constexpr long long kDefaultVerifyCap = 1LL << 20;

/// One period of the m(c) staircase row; length (2s+2)(c*ell+1).
std::vector<std::uint8_t> m_period(long long ell, const Thresholds& eta, long long c);

/// Periodic extension of the m(c) period, truncated to `width` leftmost bits.
std::vector<std::uint8_t> m_pattern(long long ell, const Thresholds& eta, long long c,
                                    long long width);

/// i-row recursion for the saturation model (eta = (1..ell)); one period,
/// width 2*(ell+1)^(i+1). Its outcome matrix is the paired Gray code with
/// every column repeated ell+1 times.
BinaryMatrix rec_saturated(long long ell, int i);

/// Truncated recursion rec'(i) for s < eta_s <= ell; correctness is
/// established computationally, not symbolically.
BinaryMatrix rec_general(long long ell, const Thresholds& eta, int i);

struct SketchBuild {
  BinaryMatrix matrix;
  bool saturated = false;
  int target_rows = 0;  // the row-count formula for these parameters
  std::vector<std::string> notes;
};

/// Sketch matrix distinguishing all head pairs at distance >= ell+2,
/// verified exhaustively at build time for n <= verify_cap.
SketchBuild build_K(long long n, long long ell, const Thresholds& eta,
                    long long verify_cap = kDefaultVerifyCap);

/// Inclusive range of candidate heads.
struct HeadWindow {
  long long lo = 0;
  long long hi = 0;
};

/// Maps sketch outcomes to head windows of diameter <= ell+1.
class SketchDecoder {
 public:
  /// `scheme` must carry a "sketch" component (or be a pure-K scheme with a
  /// single component named "sketch").
  explicit SketchDecoder(const Scheme& scheme);

  HeadWindow window(std::span<const int> sketch_levels) const;

 private:
  long long n_;
  long long ell_;
  int s_;
  bool saturated_;
  // general case: canonical outcome key -> [lo, hi]
  std::vector<std::pair<std::vector<int>, HeadWindow>> map_;
  HeadWindow lookup_general(std::span<const int> levels) const;
};

/// One-shot convenience wrapper around SketchDecoder.
HeadWindow decode_K(const Scheme& scheme, std::span<const int> sketch_levels);

}  // namespace sqgt
