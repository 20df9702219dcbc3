#include "sqgt/sketch.hpp"

#include <algorithm>
#include <map>

#include "sqgt/gray.hpp"

namespace sqgt {

namespace {

// smallest t >= 0 with base^t * mult >= target
int ceil_log(long long base, long long target, long long mult = 1) {
  int t = 0;
  long long p = mult;
  while (p < target) {
    p *= base;
    ++t;
  }
  return t;
}

std::vector<std::uint8_t> tile(std::span<const std::uint8_t> row, long long copies) {
  std::vector<std::uint8_t> out;
  out.reserve(row.size() * static_cast<std::size_t>(copies));
  for (long long k = 0; k < copies; ++k) out.insert(out.end(), row.begin(), row.end());
  return out;
}

BinaryMatrix from_rows(const std::vector<std::vector<std::uint8_t>>& rows) {
  BinaryMatrix m(static_cast<long long>(rows.size()), static_cast<long long>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<long long>(r), rows[r]);
  return m;
}

}  // namespace

std::vector<std::uint8_t> m_period(long long ell, const Thresholds& eta, long long c) {
  if (c < 1) throw ParameterError("m_period: c must be >= 1");
  if (eta.largest() > ell) throw ParameterError("m_period: largest threshold exceeds ell");
  const int s = eta.s();
  const long long width = (2LL * s + 2) * (c * ell + 1);
  if (width > kMaxMatrixColumns) throw ParameterError("m_period: width exceeds size cap");

  auto oll = [&](long long x) {  // 0^{ell-x} 1^x
    std::vector<std::uint8_t> v(static_cast<std::size_t>(ell), 0);
    std::fill(v.end() - static_cast<std::ptrdiff_t>(x), v.end(), 1);
    return v;
  };
  auto llo = [&](long long x) {  // 1^x 0^{ell-x}
    std::vector<std::uint8_t> v(static_cast<std::size_t>(ell), 0);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(x), 1);
    return v;
  };

  std::vector<std::uint8_t> p;
  p.reserve(static_cast<std::size_t>(width));
  auto append = [&](const std::vector<std::uint8_t>& block) {
    auto tiled = tile(block, c);
    p.insert(p.end(), tiled.begin(), tiled.end());
  };
  append(oll(0));
  for (long long t : eta.values()) {
    p.push_back(0);
    append(oll(t));
  }
  p.push_back(1);
  append(llo(ell));
  for (auto it = eta.values().rbegin(); it != eta.values().rend(); ++it) {
    p.push_back(1);
    append(llo(*it - 1));
  }
  p.push_back(0);
  return p;
}

std::vector<std::uint8_t> m_pattern(long long ell, const Thresholds& eta, long long c,
                                    long long width) {
  if (width < 1) throw ParameterError("m_pattern: width must be >= 1");
  auto p = m_period(ell, eta, c);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(width));
  for (long long i = 0; i < width; ++i)
    out[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i % static_cast<long long>(p.size()))];
  return out;
}

BinaryMatrix rec_saturated(long long ell, int i) {
  if (ell < 2) throw ParameterError("rec_saturated: ell must be >= 2");
  if (i < 1) throw ParameterError("rec_saturated: i must be >= 1");
  const Thresholds eta = Thresholds::saturation(static_cast<int>(ell));
  std::vector<std::vector<std::uint8_t>> rows{m_period(ell, eta, 1)};
  long long c = 1;
  for (int level = 2; level <= i; ++level) {
    c = c * (ell + 1) + 1;  // ((ell+1)^level - 1) / ell
    std::vector<std::vector<std::uint8_t>> next{m_period(ell, eta, c)};
    for (const auto& r : rows) next.push_back(tile(r, ell + 1));
    rows = std::move(next);
  }
  return from_rows(rows);
}

BinaryMatrix rec_general(long long ell, const Thresholds& eta, int i) {
  const int s = eta.s();
  if (s >= ell) throw ParameterError("rec_general: requires s < ell");
  if (eta.largest() > ell) throw ParameterError("rec_general: largest threshold exceeds ell");
  if (i < 1) throw ParameterError("rec_general: i must be >= 1");
  std::vector<std::vector<std::uint8_t>> rows{m_period(ell, eta, 1)};
  for (int level = 2; level <= i; ++level) {
    const long long w = static_cast<long long>(rows[0].size());
    const long long alpha = w / 2 - 1;
    const long long t = alpha % ell;
    std::vector<std::vector<std::uint8_t>> next;
    {
      std::vector<std::uint8_t> top(static_cast<std::size_t>(t), 0);
      auto mid = m_period(ell, eta, alpha / ell);
      top.insert(top.end(), mid.begin(), mid.end());
      top.insert(top.end(), static_cast<std::size_t>(t), 0);
      next.push_back(std::move(top));
    }
    for (const auto& r : rows) {
      std::vector<std::uint8_t> v(r.begin(), r.end() - static_cast<std::ptrdiff_t>(t));
      std::vector<std::uint8_t> both(r.begin() + static_cast<std::ptrdiff_t>(t),
                                     r.end() - static_cast<std::ptrdiff_t>(t));
      for (int k = 0; k < s - 1; ++k) v.insert(v.end(), both.begin(), both.end());
      v.insert(v.end(), r.begin() + static_cast<std::ptrdiff_t>(t), r.end());
      if (v.size() != next[0].size())
        throw ConstructionError("rec_general: recursion width mismatch");
      next.push_back(std::move(v));
    }
    rows = std::move(next);
  }
  return from_rows(rows);
}

SketchBuild build_K(long long n, long long ell, const Thresholds& eta, long long verify_cap) {
  if (ell < 2 || ell > n) throw ParameterError("build_K: need 2 <= ell <= n");
  if (eta.largest() > ell) throw ParameterError("build_K: largest threshold exceeds ell");
  const int s = eta.s();
  SketchBuild out;
  out.saturated = (s == ell);

  auto verify = [&](const BinaryMatrix& k, const char* what) {
    if (n > verify_cap) {
      out.notes.push_back(std::string(what) + ": unverified beyond cap (n > verify cap)");
      return true;
    }
    auto w = check_distinguishable(k, eta, Mode::fixed(ell), pairs_at_distance_at_least(ell + 2));
    if (w) throw UnverifiedConstructionError(std::string("build_K: ") + what + " failed", *w);
    return true;
  };

  if (out.saturated) {
    out.target_rows = std::max(1, ceil_log(ell + 1, n - ell + 1));
    BinaryMatrix rec = rec_saturated(ell, out.target_rows);
    out.matrix = rec.left_columns(std::min(n, rec.cols()));
    if (out.matrix.cols() < n)
      throw ConstructionError("build_K: saturated recursion narrower than n");
    verify(out.matrix, "saturated recursion");
    return out;
  }

  // The outcome pattern over one rec period is a palindrome of the head
  // range (width - ell heads), so only heads in the first half are pairwise
  // safe; the target formula keeps n inside that region.
  const auto heads_fit = [&](const BinaryMatrix& rec) {
    return (rec.cols() - ell) / 2 >= n - ell + 1;
  };
  out.target_rows = std::max(1, ceil_log(s + 1, n - ell + 1, ell));
  int rows = out.target_rows;
  BinaryMatrix rec = rec_general(ell, eta, rows);
  while (!heads_fit(rec)) {
    ++rows;
    rec = rec_general(ell, eta, rows);
  }
  if (rows != out.target_rows)
    out.notes.push_back("row count deviates from the target formula: " + std::to_string(rows) +
                        " vs " + std::to_string(out.target_rows));
  try {
    out.matrix = rec.left_columns(n);
    verify(out.matrix, "general recursion");
    return out;
  } catch (const UnverifiedConstructionError&) {
    // Fall back to the single largest threshold: the refinement side of the
    // scheme only depends on eta_s anyway, at the cost of a log-2 row count.
  }
  const Thresholds single({eta.largest()});
  int rows2 = std::max(1, ceil_log(2, n - ell + 1, ell));
  BinaryMatrix rec2 = rec_general(ell, single, rows2);
  while (!heads_fit(rec2)) rec2 = rec_general(ell, single, ++rows2);
  out.matrix = rec2.left_columns(n);
  out.notes.push_back("single-threshold fallback in use: " + std::to_string(rows2) +
                      " rows vs target " + std::to_string(out.target_rows));
  verify(out.matrix, "single-threshold fallback");
  return out;
}

SketchDecoder::SketchDecoder(const Scheme& scheme) {
  scheme.validate();
  if (scheme.mode.kind != Mode::Kind::Fixed)
    throw ParameterError("SketchDecoder: fixed-length schemes only");
  n_ = scheme.n;
  ell_ = scheme.mode.ell;
  s_ = scheme.thresholds.s();
  saturated_ = (s_ == ell_);
  BinaryMatrix k = scheme.has_component("sketch")
                       ? scheme.matrix.row_range(scheme.component("sketch").begin,
                                                 scheme.component("sketch").end)
                       : scheme.matrix;
  if (saturated_) return;  // decoded arithmetically via gray_index

  std::map<OutcomeVector, HeadWindow> windows;
  auto cols = outcome_matrix(k, scheme.thresholds, Mode::fixed(ell_));
  for (long long h = 0; h < static_cast<long long>(cols.size()); ++h) {
    auto [it, inserted] = windows.emplace(cols[static_cast<std::size_t>(h)], HeadWindow{h, h});
    if (!inserted) it->second.hi = h;
  }
  for (const auto& [key, w] : windows) {
    if (w.hi - w.lo > ell_ + 1)
      throw ConstructionError("SketchDecoder: outcome class wider than ell+1 (unverified K?)");
    map_.emplace_back(key, w);
  }
}

HeadWindow SketchDecoder::lookup_general(std::span<const int> levels) const {
  OutcomeVector key(levels.begin(), levels.end());
  auto it = std::lower_bound(map_.begin(), map_.end(), key,
                             [](const auto& e, const OutcomeVector& k) { return e.first < k; });
  if (it == map_.end() || it->first != key)
    throw InconsistentOutcomeError("decode_K: outcome matches no head class");
  return it->second;
}

HeadWindow SketchDecoder::window(std::span<const int> sketch_levels) const {
  if (!saturated_) return lookup_general(sketch_levels);
  const int q = static_cast<int>(ell_) + 1;
  for (int l : sketch_levels)
    if (l < 0 || l >= q) throw InconsistentOutcomeError("decode_K: level out of range");
  std::vector<int> digits(sketch_levels.begin(), sketch_levels.end());
  long long rank = gray_index(q, digits);
  HeadWindow w{rank * q, std::min(rank * q + ell_, n_ - ell_)};
  if (w.lo > n_ - ell_)
    throw InconsistentOutcomeError("decode_K: window beyond last head");
  return w;
}

HeadWindow decode_K(const Scheme& scheme, std::span<const int> sketch_levels) {
  return SketchDecoder(scheme).window(sketch_levels);
}

}  // namespace sqgt
