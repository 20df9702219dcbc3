// Bounded-length bursts under the saturation model: the integer code N,
// the block matrix C2, a coarse localizer C1 (by contract, with a default
// two-partition substitute), the stacked scheme C, and their decoders.
#pragma once

#include <optional>
#include <span>

#include "sqgt/core.hpp"
#include "sqgt/sketch.hpp"

namespace sqgt {

/// ceil(log2 n) binary-representation rows (row 0 = least significant bit)
/// plus one all-ones row.
BinaryMatrix build_N(long long n);

/// Exact burst recovery from an integer-code outcome, valid when the
/// saturation level count s is at least the burst length.
/// Nullopt = all-zero outcome (no burst).
std::optional<Burst> decode_N(std::span<const int> levels, long long n, int s);

/// [I_{ceil(2*ell/s)} (x) 1^s] tiled to n columns; every column is in
/// exactly one test, so saturation outcomes are exact counts.
BinaryMatrix build_C2(long long n, long long ell, int s);

struct C2Decode {
  long long len = 0;
  long long period = 0;
  // present iff len > s
  std::optional<long long> head_mod;
  std::optional<long long> tail_mod;
};

C2Decode decode_C2(std::span<const int> levels, long long ell, int s);

/// Default coarse localizer: two block partitions of size 2*ell (offsets 0
/// and ell), each carrying binary block-index rows plus one indicator row.
/// Returns zero rows when n <= 2*ell. The contract is injectivity of the
/// full stacked scheme, verified at build time.
BinaryMatrix build_C1(long long n, long long ell, int s);

/// C = C1 over C2 over N; components "phase1", "phase2", "integer".
/// A caller-supplied phase-1 matrix may replace the default substitute and
/// must pass the same stacked verification.
Scheme build_bounded_scheme(long long n, long long ell, int s,
                            const std::optional<BinaryMatrix>& c1_override = std::nullopt,
                            long long verify_cap = kDefaultVerifyCap);

class BoundedDecoder {
 public:
  explicit BoundedDecoder(const Scheme& scheme);
  /// Nullopt = no burst (all-zero outcome).
  std::optional<Burst> decode(const OutcomeVector& levels) const;

 private:
  const Scheme& scheme_;
};

std::optional<Burst> decode_bounded(const Scheme& scheme, const OutcomeVector& levels);

}  // namespace sqgt
