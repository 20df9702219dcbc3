#include <numeric>
#include <string>

#include "doctest.h"
#include "sqgt/bounded.hpp"
#include "sqgt/oracle.hpp"

using namespace sqgt;

namespace {

std::string row_to_string(const BinaryMatrix& m, long long r) {
  std::string s;
  for (long long c = 0; c < m.cols(); ++c) s += (m.at(r, c) ? '1' : '0');
  return s;
}

}  // namespace

TEST_CASE("integer code golden matrices") {
  BinaryMatrix n8 = build_N(8);
  REQUIRE(n8.rows() == 4);
  CHECK(row_to_string(n8, 0) == "01010101");
  CHECK(row_to_string(n8, 1) == "00110011");
  CHECK(row_to_string(n8, 2) == "00001111");
  CHECK(row_to_string(n8, 3) == "11111111");

  BinaryMatrix n2 = build_N(2);
  CHECK(row_to_string(n2, 0) == "01");
  CHECK(row_to_string(n2, 1) == "11");
  CHECK_THROWS_AS(build_N(1), ParameterError);

  // each column is the binary representation of its index
  BinaryMatrix n13 = build_N(13);
  for (long long j = 0; j < 13; ++j) {
    long long v = 0;
    for (long long r = 0; r + 1 < n13.rows(); ++r) v += n13.at(r, j) << r;
    CHECK(v == j);
  }
}

TEST_CASE("integer code decoding") {
  CHECK(decode_N(std::vector<int>{1, 2, 1, 3}, 8, 8) == Burst{2, 3});
  CHECK_FALSE(decode_N(std::vector<int>{0, 0, 0, 0}, 8, 8).has_value());
  CHECK(decode_N(std::vector<int>{0, 0, 0, 1}, 8, 8) == Burst{0, 1});
  // zero length with nonzero index levels is contradictory
  CHECK_THROWS_AS(decode_N(std::vector<int>{1, 0, 0, 0}, 8, 8), InconsistentOutcomeError);
  // index sum inconsistent with the claimed length
  CHECK_THROWS_AS(decode_N(std::vector<int>{0, 1, 0, 2}, 8, 8), InconsistentOutcomeError);
  CHECK_THROWS_AS(decode_N(std::vector<int>{0, 0, 1}, 8, 8), InconsistentOutcomeError);

  // exact recovery of every burst when s >= ell
  const long long n = 32;
  BinaryMatrix m = build_N(n);
  Thresholds sat = Thresholds::saturation(8);
  for (const Burst& b : enumerate_bursts(n, Mode::bounded(8))) {
    auto levels = outcome(m, sat, b);
    CHECK(decode_N(levels, n, 8) == b);
  }
}

TEST_CASE("block matrix structure and exact counts") {
  BinaryMatrix c2 = build_C2(16, 4, 2);
  REQUIRE(c2.rows() == 4);  // ceil(2*ell/s)
  CHECK(row_to_string(c2, 0) == "1100000011000000");

  Thresholds sat = Thresholds::saturation(2);
  CHECK(outcome(c2, sat, Burst{1, 3}) == OutcomeVector{1, 2, 0, 0});

  // every item is in exactly one test, so levels sum to the burst length
  for (const Burst& b : enumerate_bursts(16, Mode::bounded(4))) {
    auto levels = outcome(c2, sat, b);
    CHECK(std::accumulate(levels.begin(), levels.end(), 0LL) == b.length);
  }
  CHECK_THROWS_AS(build_C2(16, 4, 4), ParameterError);  // needs s < ell
}

TEST_CASE("block matrix decoding with and without wrap-around") {
  C2Decode d = decode_C2(std::vector<int>{1, 2, 0, 0}, 4, 2);
  CHECK(d.len == 3);
  CHECK(d.period == 8);
  CHECK(d.head_mod == 1);
  CHECK(d.tail_mod == 3);

  C2Decode small = decode_C2(std::vector<int>{0, 2, 0, 0}, 4, 2);
  CHECK(small.len == 2);
  CHECK_FALSE(small.head_mod.has_value());

  // burst {7,8,9} wraps across the period boundary
  BinaryMatrix c2 = build_C2(16, 4, 2);
  Thresholds sat = Thresholds::saturation(2);
  auto levels = outcome(c2, sat, Burst{7, 3});
  C2Decode wrap = decode_C2(levels, 4, 2);
  CHECK(wrap.len == 3);
  CHECK(wrap.head_mod == 7);
  CHECK(wrap.tail_mod == 1);

  CHECK_THROWS_AS(decode_C2(std::vector<int>{2, 0, 2, 0}, 4, 2), InconsistentOutcomeError);
  CHECK_THROWS_AS(decode_C2(std::vector<int>{1, 2}, 4, 2), InconsistentOutcomeError);
}

TEST_CASE("residues and lengths are consistent for every burst") {
  const long long n = 64, ell = 6;
  const int s = 3;
  BinaryMatrix c2 = build_C2(n, ell, s);
  Thresholds sat = Thresholds::saturation(s);
  for (const Burst& b : enumerate_bursts(n, Mode::bounded(ell))) {
    C2Decode d = decode_C2(outcome(c2, sat, b), ell, s);
    CHECK(d.len == b.length);
    if (b.length > s) {
      REQUIRE(d.head_mod.has_value());
      CHECK(*d.head_mod == b.head % d.period);
      CHECK(*d.tail_mod == b.tail() % d.period);
    }
  }
}

TEST_CASE("coarse localizer shape") {
  CHECK(build_C1(32, 16, 4).rows() == 0);  // one block covers everything
  BinaryMatrix c1 = build_C1(128, 16, 4);
  // partition at offset 0: 4 blocks (2 bits + indicator); offset ell: 5 blocks
  CHECK(c1.rows() == 7);
}

TEST_CASE("dropping the coarse localizer aliases heads one period apart") {
  const long long n = 128, ell = 16;
  const int s = 4;
  BinaryMatrix stack = build_C2(n, ell, s).stacked(build_N(n));
  auto w = check_distinguishable(stack, Thresholds::saturation(s), Mode::bounded(ell),
                                 pairs_all());
  REQUIRE(w.has_value());
  CHECK(w->a.length == w->b.length);
  CHECK(w->b.head - w->a.head == 32);  // the block-matrix period
}

TEST_CASE("bounded scheme builds, verifies, and decodes everywhere") {
  const long long n = 96, ell = 8;
  const int s = 4;
  Scheme scheme = build_bounded_scheme(n, ell, s);
  CHECK(scheme.component("phase2").end - scheme.component("phase2").begin == 4);
  CHECK(scheme.component("integer").end - scheme.component("integer").begin == 8);

  LookupDecoder lookup = build_lookup(scheme);
  BoundedDecoder dec(scheme);
  for (const Burst& b : enumerate_bursts(n, Mode::bounded(ell))) {
    auto levels = outcome(scheme.matrix, scheme.thresholds, b);
    CHECK(dec.decode(levels) == b);
    CHECK(lookup.decode(levels) == b);
  }
  CHECK_FALSE(dec.decode(OutcomeVector(static_cast<std::size_t>(scheme.matrix.rows()), 0))
                  .has_value());
}

TEST_CASE("user-supplied coarse localizer must keep the scheme injective") {
  const long long n = 128, ell = 16;
  const int s = 4;
  // an all-zero phase-1 adds nothing and leaves the period aliasing in place
  CHECK_THROWS_AS(build_bounded_scheme(n, ell, s, BinaryMatrix(1, n)),
                  UnverifiedConstructionError);
  Scheme ok = build_bounded_scheme(n, ell, s, build_C1(n, ell, s));
  bool flagged = false;
  for (const auto& note : ok.notes) flagged = flagged || note.find("user-supplied") != std::string::npos;
  CHECK(flagged);
}
