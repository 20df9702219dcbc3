#include <string>

#include "doctest.h"
#include "sqgt/gray.hpp"
#include "sqgt/oracle.hpp"
#include "sqgt/refine.hpp"

using namespace sqgt;

namespace {

std::string row_to_string(const BinaryMatrix& m, long long r) {
  std::string s;
  for (long long c = 0; c < m.cols(); ++c) s += (m.at(r, c) ? '1' : '0');
  return s;
}

// raw (unquantized) count of one row over a burst window
long long raw_count(const BinaryMatrix& m, long long r, const Burst& b) {
  long long count = 0;
  for (long long j = b.head; j <= b.tail(); ++j) count += m.at(r, j);
  return count;
}

}  // namespace

TEST_CASE("gray-block matrix golden rows") {
  BinaryMatrix b = build_B(2, 7);
  REQUIRE(b.rows() == 7);
  REQUIRE(b.cols() == 29);
  CHECK(row_to_string(b, 0) == "0" "0011" "0110" "0000" "0000" "0000" "0000" "1111");
  CHECK(row_to_string(b, 6) == "0" "1111" "0011" "0110" "0000" "0000" "0000" "0000");
  for (long long r = 0; r < 7; ++r) {
    CHECK(runs_of_ones(b.row(r)) == 3);  // eta_s - 1 with eta_s = 2^(h-1)+2 = 4
    CHECK(b.at(r, 0) == 0);
  }
  CHECK_THROWS_AS(build_B(2, 6), ParameterError);  // needs c > 2(h+1)
  CHECK_THROWS_AS(build_B(0, 7), ParameterError);
}

TEST_CASE("condition checks catch planted defects") {
  BinaryMatrix b = build_B(2, 7);
  CHECK(check_B(b, 4).all());

  BinaryMatrix dup = b;  // duplicate column 2 into column 3
  for (long long r = 0; r < dup.rows(); ++r) dup.set(r, 3, dup.at(r, 2));
  auto rep1 = check_B(dup, 4);
  CHECK_FALSE(rep1.c1);
  CHECK(rep1.witness.find("C1") != std::string::npos);

  BinaryMatrix nz = b;
  nz.set(0, 0, 1);
  auto rep2 = check_B(nz, 4);
  CHECK_FALSE(rep2.c2);

  auto rep3 = check_B(b, 5);  // wrong largest threshold breaks C3
  CHECK_FALSE(rep3.c3);
}

TEST_CASE("refinement outcome identity for every head") {
  // raw counts: (eta_s - 1) + B(:,i) for i < ell, eta_s - B(:,i-ell) after.
  for (auto [h, c] : {std::pair<int, int>{2, 7}, {2, 8}}) {
    const long long eta_s = (1LL << (h - 1)) + 2;
    Thresholds eta({1, 2, eta_s});
    BinaryMatrix b = build_B(h, c);
    const long long ell = b.cols();
    const long long n = 4 * ell;
    BinaryMatrix r = build_R(b, eta, n);
    for (long long head = 0; head + ell <= n; ++head) {
      const long long i = head % (2 * ell);
      for (long long row = 0; row < r.rows(); ++row) {
        long long count = raw_count(r, row, Burst{head, ell});
        long long expected = i < ell ? (eta_s - 1) + b.at(row, i) : eta_s - b.at(row, i - ell);
        CHECK(count == expected);
      }
    }
  }
  CHECK_THROWS_AS(build_R(build_B(2, 7), Thresholds({1, 2, 5}), 116), ParameterError);
}

TEST_CASE("refinement distinguishes all heads within distance 2*ell") {
  Thresholds eta({1, 2, 4});
  BinaryMatrix b = build_B(2, 7);
  BinaryMatrix r = build_R(b, eta, 4 * 29);
  CHECK_FALSE(check_distinguishable(r, eta, Mode::fixed(29), pairs_at_distance_below(58)));
  // the largest threshold alone suffices
  CHECK_FALSE(
      check_distinguishable(r, Thresholds({4}), Mode::fixed(29), pairs_at_distance_below(58)));
}

TEST_CASE("residue decoding round trip") {
  Thresholds eta({1, 2, 4});
  const int s = eta.s();
  BinaryMatrix b = build_B(2, 7);
  const long long ell = b.cols();
  BinaryMatrix r = build_R(b, eta, 4 * ell);

  CHECK(decode_R(b, eta, std::vector<int>(7, s - 1)) == 0);
  CHECK(decode_R(b, eta, std::vector<int>(7, s)) == ell);
  for (long long head = 0; head < 2 * ell; ++head) {
    auto levels = outcome(r, eta, Burst{head, ell});
    for (int l : levels) CHECK((l == s - 1 || l == s));
    CHECK(decode_R(b, eta, levels) == head);
  }
  CHECK_THROWS_AS(decode_R(b, eta, std::vector<int>(7, 0)), InconsistentOutcomeError);
  CHECK_THROWS_AS(decode_R(b, eta, std::vector<int>(6, s)), InconsistentOutcomeError);
}

TEST_CASE("stacked fixed scheme builds, verifies, and decodes") {
  Thresholds eta({1, 2, 4});
  Scheme s = build_fixed_scheme(120, 2, 7, eta);
  CHECK(s.mode.ell == 29);
  CHECK(s.component("refine").end - s.component("refine").begin == 7);

  LookupDecoder lookup = build_lookup(s);
  FixedDecoder dec(s);
  for (long long head = 0; head + 29 <= 120; ++head) {
    auto levels = outcome(s.matrix, eta, Burst{head, 29});
    CHECK(dec.decode(levels) == head);
    auto ref = lookup.decode(levels);
    REQUIRE(ref.has_value());
    CHECK(ref->head == head);
  }

  // corrupt a refine-row level outside {s-1, s}
  auto levels = outcome(s.matrix, eta, Burst{5, 29});
  levels[static_cast<std::size_t>(s.component("refine").begin)] = 0;
  CHECK_THROWS_AS(dec.decode(levels), InconsistentOutcomeError);

  CHECK_THROWS_AS(build_fixed_scheme(120, 2, 7, Thresholds({1, 2, 5})), ParameterError);
  CHECK_THROWS_AS(build_fixed_scheme(20, 2, 7, eta), ParameterError);  // ell > n
}

TEST_CASE("degenerate single-head scheme") {
  Thresholds eta({1, 2, 4});
  Scheme s = build_fixed_scheme(29, 2, 7, eta);
  auto levels = outcome(s.matrix, eta, Burst{0, 29});
  CHECK(decode_fixed(s, levels) == 0);
}
