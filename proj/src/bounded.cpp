#include "sqgt/bounded.hpp"

#include <algorithm>
#include <cmath>

#include "sqgt/oracle.hpp"

namespace sqgt {

namespace {

int bit_width_of_count(long long count) {  // ceil(log2 count), 0 for count <= 1
  int r = 0;
  while ((1LL << r) < count) ++r;
  return r;
}

}  // namespace

BinaryMatrix build_N(long long n) {
  if (n < 2) throw ParameterError("build_N: n must be >= 2");
  const int bits = bit_width_of_count(n);
  BinaryMatrix m(bits + 1, n);
  for (long long j = 0; j < n; ++j) {
    for (int r = 0; r < bits; ++r)
      if ((j >> r) & 1) m.set(r, j, 1);
    m.set(bits, j, 1);
  }
  return m;
}

std::optional<Burst> decode_N(std::span<const int> levels, long long n, int s) {
  const int bits = bit_width_of_count(n);
  if (static_cast<int>(levels.size()) != bits + 1)
    throw InconsistentOutcomeError("decode_N: outcome length != ceil(log2 n) + 1");
  const long long len = levels[static_cast<std::size_t>(bits)];
  bool all_zero = std::all_of(levels.begin(), levels.end(), [](int l) { return l == 0; });
  if (len == 0) {
    if (!all_zero) throw InconsistentOutcomeError("decode_N: zero length with nonzero levels");
    return std::nullopt;
  }
  if (len > s) throw InconsistentOutcomeError("decode_N: length level exceeds s");
  long long k = 0;
  for (int r = 0; r < bits; ++r) k += (1LL << r) * levels[static_cast<std::size_t>(r)];
  // k = (head + tail)/2 * len  =>  head = (2k - len(len-1)) / (2 len)
  const long long num = 2 * k - len * (len - 1);
  if (num < 0 || num % (2 * len) != 0)
    throw InconsistentOutcomeError("decode_N: index sum not consistent with length");
  const long long head = num / (2 * len);
  if (head + len > n) throw InconsistentOutcomeError("decode_N: burst out of range");
  // The outcome must actually be the exact per-bit counts of this burst.
  for (int r = 0; r < bits; ++r) {
    long long count = 0;
    for (long long j = head; j < head + len; ++j) count += (j >> r) & 1;
    if (count != levels[static_cast<std::size_t>(r)])
      throw InconsistentOutcomeError("decode_N: bit counts inconsistent");
  }
  return Burst{head, len};
}

BinaryMatrix build_C2(long long n, long long ell, int s) {
  if (s < 1 || s >= ell || ell > n) throw ParameterError("build_C2: need 1 <= s < ell <= n");
  const long long t = (2 * ell + s - 1) / s;  // ceil(2*ell/s)
  const long long p = t * s;
  BinaryMatrix m(t, n);
  for (long long j = 0; j < n; ++j) m.set((j % p) / s, j, 1);
  return m;
}

C2Decode decode_C2(std::span<const int> levels, long long ell, int s) {
  const long long t = (2 * ell + s - 1) / s;
  if (static_cast<long long>(levels.size()) != t)
    throw InconsistentOutcomeError("decode_C2: outcome length != ceil(2*ell/s)");
  C2Decode d;
  d.period = t * s;
  for (int l : levels) {
    if (l < 0 || l > s) throw InconsistentOutcomeError("decode_C2: level outside [0, s]");
    d.len += l;
  }
  if (d.len <= s) return d;

  // Locate the single circular run of nonzero levels o_h, s, ..., s, o_t.
  long long z = -1;
  for (long long i = 0; i < t; ++i)
    if (levels[static_cast<std::size_t>(i)] == 0) {
      z = i;
      break;
    }
  if (z < 0) throw InconsistentOutcomeError("decode_C2: no zero level; not a single run");
  long long start = -1, end = -1;
  bool in_run = false, run_done = false;
  for (long long k = 1; k <= t; ++k) {
    long long i = (z + k) % t;
    int l = levels[static_cast<std::size_t>(i)];
    if (l > 0) {
      if (run_done)
        throw InconsistentOutcomeError("decode_C2: nonzero levels form more than one run");
      if (!in_run) {
        in_run = true;
        start = i;
      }
      end = i;
    } else if (in_run) {
      in_run = false;
      run_done = true;
    }
  }
  if (start < 0 || start == end)
    throw InconsistentOutcomeError("decode_C2: run structure inconsistent with len > s");
  for (long long i = (start + 1) % t; i != end; i = (i + 1) % t)
    if (levels[static_cast<std::size_t>(i)] != s)
      throw InconsistentOutcomeError("decode_C2: run interior not saturated");
  const long long o_h = levels[static_cast<std::size_t>(start)];
  const long long o_t = levels[static_cast<std::size_t>(end)];
  d.head_mod = (((start + 1) * s - o_h) % d.period + d.period) % d.period;
  d.tail_mod = (end * s + o_t - 1) % d.period;
  return d;
}

BinaryMatrix build_C1(long long n, long long ell, int s) {
  if (s < 1 || s >= ell || ell > n) throw ParameterError("build_C1: need 1 <= s < ell <= n");
  if (n <= 2 * ell) return BinaryMatrix(0, n);  // a single block covers everything
  const long long span = 2 * ell;

  std::vector<std::vector<std::uint8_t>> rows;
  auto add_partition = [&](long long offset) {
    auto block_of = [&](long long j) { return (j + offset) / span; };
    const long long nblocks = block_of(n - 1) + 1;
    const int bits = bit_width_of_count(nblocks);
    for (int k = 0; k < bits; ++k) {
      std::vector<std::uint8_t> row(static_cast<std::size_t>(n));
      for (long long j = 0; j < n; ++j)
        row[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((block_of(j) >> k) & 1);
      rows.push_back(std::move(row));
    }
    std::vector<std::uint8_t> ind(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j)
      ind[static_cast<std::size_t>(j)] = block_of(j) >= 1;
    rows.push_back(std::move(ind));
  };
  add_partition(0);
  add_partition(ell);

  BinaryMatrix m(static_cast<long long>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<long long>(r), rows[r]);
  return m;
}

Scheme build_bounded_scheme(long long n, long long ell, int s,
                            const std::optional<BinaryMatrix>& c1_override,
                            long long verify_cap) {
  if (s < 1 || s >= ell || ell > n)
    throw ParameterError("build_bounded_scheme: need 1 <= s < ell <= n");
  const Thresholds eta = Thresholds::saturation(s);

  BinaryMatrix c1 = c1_override ? *c1_override : build_C1(n, ell, s);
  if (c1.cols() != n) throw ParameterError("build_bounded_scheme: phase-1 matrix width != n");
  BinaryMatrix c2 = build_C2(n, ell, s);
  BinaryMatrix c3 = build_N(n);

  Scheme scheme{c1.stacked(c2).stacked(c3), eta, n, Mode::bounded(ell), {}, {}};
  const long long h1 = c1.rows(), h2 = c2.rows(), h3 = c3.rows();
  scheme.components = {
      {"phase1", 0, h1}, {"phase2", h1, h1 + h2}, {"integer", h1 + h2, h1 + h2 + h3}};
  scheme.validate();

  const double target_height = 2.0 * ell / s + 2 * std::log2(static_cast<double>(n)) + 3;
  if (static_cast<double>(scheme.matrix.rows()) > target_height)
    scheme.notes.push_back(
        "height " + std::to_string(scheme.matrix.rows()) + " exceeds the 2l/s + 2log2(n) + 3 target (" +
        std::to_string(target_height) + "); excess comes from the substitute phase-1 matrix");
  if (c1_override) scheme.notes.push_back("user-supplied phase-1 matrix");

  if (n <= verify_cap) {
    auto w = check_distinguishable(scheme.matrix, eta, scheme.mode, pairs_all());
    if (w) throw UnverifiedConstructionError("build_bounded_scheme: scheme not injective", *w);
  } else {
    scheme.notes.push_back("injectivity unverified beyond cap (n > verify cap)");
  }
  return scheme;
}

BoundedDecoder::BoundedDecoder(const Scheme& scheme) : scheme_(scheme) {
  scheme.validate();
  if (scheme.mode.kind != Mode::Kind::Bounded)
    throw ParameterError("BoundedDecoder: bounded schemes only");
  if (scheme.thresholds != Thresholds::saturation(scheme.thresholds.s()))
    throw ParameterError("BoundedDecoder: saturation thresholds required");
}

std::optional<Burst> BoundedDecoder::decode(const OutcomeVector& levels) const {
  const long long n = scheme_.n;
  const long long ell = scheme_.mode.ell;
  const int s = scheme_.thresholds.s();
  auto c2_levels = scheme_.component_levels("phase2", levels);
  auto n_levels = scheme_.component_levels("integer", levels);

  C2Decode dc = decode_C2(c2_levels, ell, s);
  if (dc.len == 0) {
    if (!std::all_of(levels.begin(), levels.end(), [](int l) { return l == 0; }))
      throw InconsistentOutcomeError("decode_bounded: zero length with nonzero levels");
    return std::nullopt;
  }
  if (dc.len > ell) throw InconsistentOutcomeError("decode_bounded: length exceeds ell");

  if (dc.len <= s) {
    auto b = decode_N(n_levels, n, s);
    if (!b) throw InconsistentOutcomeError("decode_bounded: integer code saw no burst");
    if (outcome(scheme_.matrix, scheme_.thresholds, *b) != levels)
      throw InconsistentOutcomeError("decode_bounded: outcome inconsistent with decoded burst");
    return b;
  }

  // len > s: the C2 residue pins head mod period; filter candidates by the
  // full predicted outcome.
  std::optional<Burst> found;
  for (long long head = *dc.head_mod; head + dc.len <= n; head += dc.period) {
    Burst cand{head, dc.len};
    if (outcome(scheme_.matrix, scheme_.thresholds, cand) != levels) continue;
    if (found)
      throw InconsistentOutcomeError("decode_bounded: multiple consistent candidates");
    found = cand;
  }
  if (!found) throw InconsistentOutcomeError("decode_bounded: no consistent candidate");
  return found;
}

std::optional<Burst> decode_bounded(const Scheme& scheme, const OutcomeVector& levels) {
  return BoundedDecoder(scheme).decode(levels);
}

}  // namespace sqgt
