// The refinement matrix R: the Gray-block matrix B (conditions C1-C3),
// R assembly from the cyclic column difference of B, residue decoding,
// and the stacked fixed-length scheme (sketch over refinement).
#pragma once

#include <optional>
#include <span>
#include <string>

#include "sqgt/core.hpp"
#include "sqgt/sketch.hpp"

namespace sqgt {

/// h_B = c rows, ell = c*2^h + 1 columns. Throws ConstructionError if any
/// of C1-C3 fails (the construction guarantees them for c > 2(h+1)).
BinaryMatrix build_B(int h, int c);

struct BConditionReport {
  bool c1 = false;  // columns and their complements pairwise distinct
  bool c2 = false;  // first column all-zero
  bool c3 = false;  // each row of shiftleft(B)-B has exactly eta_s-1 entries -1
  std::string witness;

  bool all() const { return c1 && c2 && c3; }
};

BConditionReport check_B(const BinaryMatrix& b, long long eta_s);

/// Periodic [R- R+] matrix of width n built from B; period 2*ell.
/// Every fixed-ell burst outcome entry lands in {eta_s - 1, eta_s}.
BinaryMatrix build_R(const BinaryMatrix& b, const Thresholds& eta, long long n);

/// head mod 2*ell from a refinement outcome (levels all in {s-1, s}).
long long decode_R(const BinaryMatrix& b, const Thresholds& eta, std::span<const int> levels);

/// Sketch K stacked over refinement R; components "sketch" and "refine".
Scheme build_fixed_scheme(long long n, int h, int c, const Thresholds& eta,
                          long long verify_cap = kDefaultVerifyCap);

/// Decodes a fixed scheme by intersecting the sketch head window with the
/// refinement residue class mod 2*ell.
class FixedDecoder {
 public:
  explicit FixedDecoder(const Scheme& scheme);
  long long decode(const OutcomeVector& levels) const;

 private:
  const Scheme& scheme_;
  SketchDecoder sketch_;
  std::vector<std::pair<std::vector<int>, long long>> residues_;  // refine outcome -> head mod 2ell
};

long long decode_fixed(const Scheme& scheme, const OutcomeVector& levels);

}  // namespace sqgt
