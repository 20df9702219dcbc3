#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "sqgt/bounded.hpp"
#include "sqgt/io.hpp"
#include "sqgt/refine.hpp"

using namespace sqgt;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("matrix file format") {
  BinaryMatrix m(1, 3);
  m.set(0, 0, 1);
  m.set(0, 2, 1);
  auto path = temp_path("sqgt_fmt.matrix");
  save_matrix(m, path);
  CHECK(slurp(path) == "1 3\n101\n");
  CHECK(load_matrix(path) == m);
  std::remove(path.c_str());
}

TEST_CASE("gray-block matrix round trip with expected header") {
  BinaryMatrix b = build_B(2, 7);
  auto path = temp_path("sqgt_b.matrix");
  save_matrix(b, path);
  auto text = slurp(path);
  CHECK(text.substr(0, 5) == "7 29\n");
  CHECK(text.size() == 5 + 7 * 30);  // 7 rows of 29 chars + newline
  CHECK(load_matrix(path) == b);
  std::remove(path.c_str());
}

TEST_CASE("random matrices round trip bit-exactly") {
  std::mt19937 rng(7);
  std::bernoulli_distribution bit(0.5);
  auto path = temp_path("sqgt_rand.matrix");
  for (int trial = 0; trial < 10; ++trial) {
    BinaryMatrix m(1 + trial % 4, 1 + trial);
    for (long long r = 0; r < m.rows(); ++r)
      for (long long c = 0; c < m.cols(); ++c) m.set(r, c, bit(rng));
    save_matrix(m, path);
    CHECK(load_matrix(path) == m);
  }
  std::remove(path.c_str());
}

TEST_CASE("parse errors carry line numbers") {
  auto path = temp_path("sqgt_bad.matrix");

  spit(path, "nonsense\n101\n");
  CHECK_THROWS_WITH_AS(load_matrix(path), doctest::Contains("line 1"), ParseError);

  spit(path, "2 3\n101\n");
  try {
    load_matrix(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);  // second data row missing
  }

  spit(path, "2 3\n101\n10\n");
  try {
    load_matrix(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);  // wrong row length
  }

  spit(path, "1 3\n1x1\n");
  try {
    load_matrix(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);  // non-0/1 character
  }

  CHECK_THROWS_AS(load_matrix(temp_path("sqgt_absent.matrix")), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("scheme round trip including metadata") {
  Scheme scheme = build_bounded_scheme(64, 6, 3);
  auto paths = scheme_paths(temp_path("sqgt_scheme"));
  save_scheme(scheme, paths);
  Scheme loaded = load_scheme(paths);
  CHECK(loaded.matrix == scheme.matrix);
  CHECK(loaded.thresholds == scheme.thresholds);
  CHECK(loaded.n == scheme.n);
  CHECK(loaded.mode == scheme.mode);
  CHECK(loaded.components == scheme.components);
  CHECK(loaded.notes == scheme.notes);
  std::remove(paths.matrix_path.c_str());
  std::remove(paths.metadata_path.c_str());
}

TEST_CASE("fixed scheme metadata carries the component layout") {
  Thresholds eta({1, 2, 4});
  Scheme scheme = build_fixed_scheme(120, 2, 7, eta);
  auto paths = scheme_paths(temp_path("sqgt_fixed"));
  save_scheme(scheme, paths);
  auto text = slurp(paths.metadata_path);
  CHECK(text.find("\"model\": \"fixed\"") != std::string::npos);
  CHECK(text.find("\"sketch\"") != std::string::npos);
  CHECK(text.find("\"refine\"") != std::string::npos);
  Scheme loaded = load_scheme(paths);
  CHECK(loaded.component("refine") == scheme.component("refine"));
  std::remove(paths.matrix_path.c_str());
  std::remove(paths.metadata_path.c_str());
}

TEST_CASE("inconsistent or incomplete metadata is rejected") {
  auto paths = scheme_paths(temp_path("sqgt_broken"));
  spit(paths.matrix_path, "1 3\n101\n");

  spit(paths.metadata_path, R"({"model":"fixed","n":3,"ell":1,)"
                            R"("components":[{"name":"sketch","rows":[0,1]}],"notes":[]})");
  CHECK_THROWS_AS(load_scheme(paths), ParseError);  // missing thresholds

  spit(paths.metadata_path, R"({"model":"fixed","n":4,"ell":1,"thresholds":[1],)"
                            R"("components":[{"name":"sketch","rows":[0,1]}],"notes":[]})");
  CHECK_THROWS_AS(load_scheme(paths), ParseError);  // n disagrees with the matrix

  spit(paths.metadata_path, "{not json");
  CHECK_THROWS_AS(load_scheme(paths), ParseError);

  std::remove(paths.matrix_path.c_str());
  std::remove(paths.metadata_path.c_str());
}
