#include "sqgt/refine.hpp"

#include <algorithm>
#include <map>

#include "sqgt/gray.hpp"
#include "sqgt/oracle.hpp"

namespace sqgt {

BinaryMatrix build_B(int h, int c) {
  if (h < 1) throw ParameterError("build_B: h must be >= 1");
  if (c <= 2 * (h + 1)) throw ParameterError("build_B: need c > 2(h+1)");
  const long long hb = c;
  const long long block = 1LL << h;
  const long long ell = c * block + 1;
  GrayMatrix gray = gray_matrix(2, h);

  BinaryMatrix b(hb, ell);
  // Column 0 stays zero; blocks run G+_{hb-1} .. G+_0 left to right. Block i
  // puts the all-ones row at row i and the Gray rows below it, wrapping mod hb.
  for (long long i = hb - 1; i >= 0; --i) {
    const long long start = 1 + (hb - 1 - i) * block;
    for (long long j = 0; j < block; ++j) b.set(i % hb, start + j, 1);
    for (int k = 1; k <= h; ++k) {
      const long long r = (i + k) % hb;
      for (long long j = 0; j < block; ++j)
        b.set(r, start + j,
              static_cast<std::uint8_t>(gray.rows[static_cast<std::size_t>(k - 1)]
                                                 [static_cast<std::size_t>(j)]));
    }
  }

  const long long eta_s = (1LL << (h - 1)) + 2;
  auto report = check_B(b, eta_s);
  if (!report.all())
    throw ConstructionError("build_B: condition check failed: " + report.witness);
  return b;
}

BConditionReport check_B(const BinaryMatrix& b, long long eta_s) {
  BConditionReport rep;
  const long long hb = b.rows();
  const long long ell = b.cols();

  // C2
  rep.c2 = true;
  for (long long r = 0; r < hb; ++r)
    if (b.at(r, 0)) {
      rep.c2 = false;
      rep.witness += "C2: first column not zero at row " + std::to_string(r) + "; ";
      break;
    }

  // C1: columns and complements pairwise distinct
  rep.c1 = true;
  std::map<std::vector<std::uint8_t>, std::string> seen;
  for (long long i = 0; i < ell && rep.c1; ++i) {
    std::vector<std::uint8_t> col(static_cast<std::size_t>(hb));
    for (long long r = 0; r < hb; ++r) col[static_cast<std::size_t>(r)] = b.at(r, i);
    std::vector<std::uint8_t> comp(col);
    for (auto& v : comp) v ^= 1;
    for (const auto* candidate : {&col, &comp}) {
      std::string label = (candidate == &col ? "column " : "complement of column ") +
                          std::to_string(i);
      auto [it, inserted] = seen.emplace(*candidate, label);
      if (!inserted) {
        rep.c1 = false;
        rep.witness += "C1: " + label + " equals " + it->second + "; ";
        break;
      }
    }
  }

  // C3: -1 count in each row of shiftleft(B) - B
  rep.c3 = true;
  for (long long r = 0; r < hb; ++r) {
    long long minus = 0;
    for (long long i = 0; i < ell; ++i)
      if (static_cast<int>(b.at(r, (i + 1) % ell)) - static_cast<int>(b.at(r, i)) == -1) ++minus;
    if (minus != eta_s - 1) {
      rep.c3 = false;
      rep.witness += "C3: row " + std::to_string(r) + " has " + std::to_string(minus) +
                     " entries -1, expected " + std::to_string(eta_s - 1) + "; ";
      break;
    }
  }
  return rep;
}

BinaryMatrix build_R(const BinaryMatrix& b, const Thresholds& eta, long long n) {
  const long long hb = b.rows();
  const long long ell = b.cols();
  if (n < 1) throw ParameterError("build_R: n must be >= 1");
  auto rep = check_B(b, eta.largest());
  if (!rep.c3)
    throw ParameterError("build_R: largest threshold does not match B (" + rep.witness + ")");

  // One period [R- R+] from the cyclic difference shiftleft(B) - B.
  BinaryMatrix period(hb, 2 * ell);
  for (long long r = 0; r < hb; ++r) {
    for (long long i = 0; i < ell; ++i) {
      int d = static_cast<int>(b.at(r, (i + 1) % ell)) - static_cast<int>(b.at(r, i));
      if (d < 0) period.set(r, i, 1);
      if (d > 0) period.set(r, ell + i, 1);
    }
    period.set(r, 2 * ell - 1, 1);  // last column of R+ becomes all-ones
  }
  BinaryMatrix out(hb, n);
  for (long long r = 0; r < hb; ++r)
    for (long long j = 0; j < n; ++j) out.set(r, j, period.at(r, j % (2 * ell)));
  return out;
}

long long decode_R(const BinaryMatrix& b, const Thresholds& eta, std::span<const int> levels) {
  const long long hb = b.rows();
  const long long ell = b.cols();
  const int s = eta.s();
  if (static_cast<long long>(levels.size()) != hb)
    throw InconsistentOutcomeError("decode_R: outcome length != rows of B");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(hb));
  for (long long r = 0; r < hb; ++r) {
    int l = levels[static_cast<std::size_t>(r)];
    if (l != s && l != s - 1)
      throw InconsistentOutcomeError("decode_R: level outside {s-1, s}");
    bits[static_cast<std::size_t>(r)] = (l == s);
  }
  for (long long i = 0; i < ell; ++i) {
    bool direct = true, complement = true;
    for (long long r = 0; r < hb && (direct || complement); ++r) {
      if (b.at(r, i) != bits[static_cast<std::size_t>(r)]) direct = false;
      if ((b.at(r, i) ^ 1) != bits[static_cast<std::size_t>(r)]) complement = false;
    }
    if (direct) return i;
    if (complement) return i + ell;
  }
  throw InconsistentOutcomeError("decode_R: outcome matches no column of B");
}

Scheme build_fixed_scheme(long long n, int h, int c, const Thresholds& eta,
                          long long verify_cap) {
  const long long eta_s_expect = (1LL << (h - 1)) + 2;
  if (eta.largest() != eta_s_expect)
    throw ParameterError("build_fixed_scheme: largest threshold must be 2^(h-1)+2");
  const long long ell = static_cast<long long>(c) * (1LL << h) + 1;
  if (ell > n) throw ParameterError("build_fixed_scheme: ell = c*2^h+1 exceeds n");

  SketchBuild k = build_K(n, ell, eta, verify_cap);
  BinaryMatrix b = build_B(h, c);
  BinaryMatrix r = build_R(b, eta, n);

  Scheme scheme{k.matrix.stacked(r), eta, n, Mode::fixed(ell), {}, std::move(k.notes)};
  scheme.components = {{"sketch", 0, k.matrix.rows()},
                       {"refine", k.matrix.rows(), k.matrix.rows() + r.rows()}};
  scheme.validate();

  if (n <= verify_cap) {
    auto w = check_distinguishable(scheme.matrix, eta, scheme.mode, pairs_all());
    if (w) throw UnverifiedConstructionError("build_fixed_scheme: scheme not injective", *w);
  } else {
    scheme.notes.push_back("injectivity unverified beyond cap (n > verify cap)");
  }
  return scheme;
}

FixedDecoder::FixedDecoder(const Scheme& scheme) : scheme_(scheme), sketch_(scheme) {
  const auto& refine = scheme.component("refine");
  BinaryMatrix r = scheme.matrix.row_range(refine.begin, refine.end);
  const long long ell = scheme.mode.ell;
  const long long heads = std::min(2 * ell, scheme.n - ell + 1);
  for (long long head = 0; head < heads; ++head) {
    auto levels = outcome(r, scheme.thresholds, Burst{head, ell});
    residues_.emplace_back(std::move(levels), head);
  }
  std::sort(residues_.begin(), residues_.end());
}

long long FixedDecoder::decode(const OutcomeVector& levels) const {
  auto sketch_levels = scheme_.component_levels("sketch", levels);
  auto refine_levels = scheme_.component_levels("refine", levels);
  HeadWindow w = sketch_.window(sketch_levels);

  std::vector<int> key(refine_levels.begin(), refine_levels.end());
  auto it = std::lower_bound(residues_.begin(), residues_.end(), key,
                             [](const auto& e, const std::vector<int>& k) { return e.first < k; });
  if (it == residues_.end() || it->first != key)
    throw InconsistentOutcomeError("decode_fixed: refinement outcome matches no residue");
  const long long residue = it->second;

  const long long period = 2 * scheme_.mode.ell;
  long long found = -1;
  for (long long head = w.lo; head <= w.hi; ++head) {
    if (head % period != residue) continue;
    if (found >= 0)
      throw InconsistentOutcomeError("decode_fixed: ambiguous window/residue intersection");
    found = head;
  }
  if (found < 0)
    throw InconsistentOutcomeError("decode_fixed: empty window/residue intersection");
  return found;
}

long long decode_fixed(const Scheme& scheme, const OutcomeVector& levels) {
  return FixedDecoder(scheme).decode(levels);
}

}  // namespace sqgt
