// Ground truth: exhaustive distinguishability checking with canonical
// collision witnesses, counting bounds, the reference lookup decoder,
// and efficiency reporting.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sqgt/core.hpp"

namespace sqgt {

/// Two distinct bursts sharing an outcome. Canonical: the lexicographically
/// least such pair under (length, head) ordering, with a < b.
struct CollisionWitness {
  Burst a;
  Burst b;
  OutcomeVector shared;
  bool operator==(const CollisionWitness&) const = default;
};

class UnverifiedConstructionError : public std::runtime_error {
 public:
  UnverifiedConstructionError(const std::string& what, CollisionWitness w);
  CollisionWitness witness;
};

using PairPredicate = std::function<bool(const Burst&, const Burst&)>;

PairPredicate pairs_all();
PairPredicate pairs_at_distance_at_least(long long dist);  // |head_a - head_b| >= dist
PairPredicate pairs_at_distance_below(long long dist);     // |head_a - head_b| < dist

/// Nullopt iff no predicate-satisfying pair of bursts shares an outcome.
/// The result (including the witness) is independent of `jobs`.
std::optional<CollisionWitness> check_distinguishable(const BinaryMatrix& m,
                                                      const Thresholds& eta, const Mode& mode,
                                                      const PairPredicate& predicate,
                                                      int jobs = 1);

struct CountingBound {
  long long bursts = 0;
  int min_tests = 0;        // ceil(log_{s+1}(bursts))
  double sketch_bound = 0;  // log_{s+1}((n-ell+1)/ell), fixed mode only
};

CountingBound counting_bound(long long n, long long ell, int s, const Mode& mode);

/// Total outcome -> burst map over all realizable outcomes of a scheme.
class LookupDecoder {
 public:
  /// Nullopt = all-zero outcome (no burst); unknown outcome -> error.
  std::optional<Burst> decode(const OutcomeVector& levels) const;
  std::size_t size() const { return map_.size(); }

 private:
  friend LookupDecoder build_lookup(const Scheme& scheme, int jobs);
  std::map<OutcomeVector, Burst> map_;
};

/// Throws UnverifiedConstructionError if two bursts collide.
LookupDecoder build_lookup(const Scheme& scheme, int jobs = 1);

struct EfficiencyReport {
  long long rows = 0;
  long long bursts = 0;
  int min_tests = 0;
  double ratio = 0;       // rows / max(1, min_tests)
  double formula_rows = 0;  // the construction's explicit row-count formula
  bool matches_formula = false;
  bool within_factor_2 = false;
  bool within_factor_4 = false;
};

EfficiencyReport efficiency_report(const Scheme& scheme);

}  // namespace sqgt
