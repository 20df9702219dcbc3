#include "sqgt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace sqgt {

UnverifiedConstructionError::UnverifiedConstructionError(const std::string& what,
                                                         CollisionWitness w)
    : std::runtime_error(what + ": bursts (head " + std::to_string(w.a.head) + ", len " +
                         std::to_string(w.a.length) + ") and (head " + std::to_string(w.b.head) +
                         ", len " + std::to_string(w.b.length) + ") share an outcome"),
      witness(std::move(w)) {}

PairPredicate pairs_all() {
  return [](const Burst&, const Burst&) { return true; };
}

PairPredicate pairs_at_distance_at_least(long long dist) {
  return [dist](const Burst& a, const Burst& b) { return std::llabs(a.head - b.head) >= dist; };
}

PairPredicate pairs_at_distance_below(long long dist) {
  return [dist](const Burst& a, const Burst& b) { return std::llabs(a.head - b.head) < dist; };
}

namespace {

// Outcomes for every burst in canonical order, split across `jobs` threads.
std::vector<OutcomeVector> all_outcomes(const BinaryMatrix& m, const Thresholds& eta,
                                        const std::vector<Burst>& bursts, int jobs) {
  std::vector<OutcomeVector> outs(bursts.size());
  if (jobs <= 1 || bursts.size() < 64) {
    for (std::size_t i = 0; i < bursts.size(); ++i) outs[i] = outcome(m, eta, bursts[i]);
    return outs;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (bursts.size() + static_cast<std::size_t>(jobs) - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(bursts.size(), lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) outs[i] = outcome(m, eta, bursts[i]);
    });
  }
  for (auto& t : workers) t.join();
  return outs;
}

}  // namespace

std::optional<CollisionWitness> check_distinguishable(const BinaryMatrix& m,
                                                      const Thresholds& eta, const Mode& mode,
                                                      const PairPredicate& predicate, int jobs) {
  auto bursts = enumerate_bursts(m.cols(), mode);
  auto outs = all_outcomes(m, eta, bursts, jobs);

  // Group burst indices by outcome; canonical (length, head) order equals
  // enumeration order, so index order is witness order.
  std::map<OutcomeVector, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < bursts.size(); ++i) groups[outs[i]].push_back(i);

  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& [key, idx] : groups) {
    if (idx.size() < 2) continue;
    for (std::size_t ai = 0; ai + 1 < idx.size(); ++ai) {
      if (best && idx[ai] > best->first) break;
      for (std::size_t bi = ai + 1; bi < idx.size(); ++bi) {
        if (predicate(bursts[idx[ai]], bursts[idx[bi]])) {
          std::pair<std::size_t, std::size_t> cand{idx[ai], idx[bi]};
          if (!best || cand < *best) best = cand;
          break;  // later b's in this group are lexicographically larger
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return CollisionWitness{bursts[best->first], bursts[best->second], outs[best->first]};
}

CountingBound counting_bound(long long n, long long ell, int s, const Mode& mode) {
  if (ell < 1 || ell > n) throw ParameterError("counting_bound: need 1 <= ell <= n");
  if (s < 1) throw ParameterError("counting_bound: need s >= 1");
  CountingBound cb;
  if (mode.kind == Mode::Kind::Fixed) {
    cb.bursts = n - ell + 1;
    cb.sketch_bound =
        std::log(static_cast<double>(n - ell + 1) / static_cast<double>(ell)) / std::log(s + 1.0);
  } else {
    for (long long len = 1; len <= ell; ++len) cb.bursts += n - len + 1;
  }
  // smallest t with (s+1)^t >= bursts
  long long pow = 1;
  int t = 0;
  while (pow < cb.bursts) {
    pow *= (s + 1);
    ++t;
  }
  cb.min_tests = t;
  return cb;
}

std::optional<Burst> LookupDecoder::decode(const OutcomeVector& levels) const {
  bool all_zero = std::all_of(levels.begin(), levels.end(), [](int l) { return l == 0; });
  if (all_zero) return std::nullopt;
  auto it = map_.find(levels);
  if (it == map_.end()) throw InconsistentOutcomeError("lookup: outcome matches no burst");
  return it->second;
}

LookupDecoder build_lookup(const Scheme& scheme, int jobs) {
  scheme.validate();
  auto bursts = enumerate_bursts(scheme.n, scheme.mode);
  auto outs = all_outcomes(scheme.matrix, scheme.thresholds, bursts, jobs);
  LookupDecoder d;
  for (std::size_t i = 0; i < bursts.size(); ++i) {
    auto [it, inserted] = d.map_.emplace(outs[i], bursts[i]);
    if (!inserted)
      throw UnverifiedConstructionError("lookup build failed",
                                        CollisionWitness{it->second, bursts[i], outs[i]});
  }
  return d;
}

EfficiencyReport efficiency_report(const Scheme& scheme) {
  scheme.validate();
  EfficiencyReport r;
  r.rows = scheme.matrix.rows();
  const int s = scheme.thresholds.s();
  auto cb = counting_bound(scheme.n, scheme.mode.ell, s, scheme.mode);
  r.bursts = cb.bursts;
  r.min_tests = cb.min_tests;
  r.ratio = static_cast<double>(r.rows) / std::max(1, r.min_tests);

  const double n = static_cast<double>(scheme.n);
  const double ell = static_cast<double>(scheme.mode.ell);
  if (scheme.mode.kind == Mode::Kind::Fixed) {
    const double eta_s = static_cast<double>(scheme.thresholds.largest());
    double sketch = std::ceil(std::log((n - ell + 1) / ell) / std::log(s + 1.0));
    if (scheme.has_component("refine")) {
      r.formula_rows = std::ceil(ell / (2 * eta_s - 4)) + sketch + 1;
    } else {
      r.formula_rows = sketch;
    }
  } else {
    if (scheme.has_component("phase2")) {
      r.formula_rows = 2 * ell / s + 2 * std::log2(n) + 3;
    } else {
      r.formula_rows = std::ceil(std::log2(n)) + 1;  // integer code alone
    }
  }
  r.matches_formula = static_cast<double>(r.rows) <= r.formula_rows;
  r.within_factor_2 = r.rows <= 2LL * std::max(1, r.min_tests);
  r.within_factor_4 = r.rows <= 4LL * std::max(1, r.min_tests);
  return r;
}

}  // namespace sqgt
