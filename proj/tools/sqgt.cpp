// Command-line front end: build, verify, simulate, and decode SQGT burst
// measurement schemes.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sqgt/bounded.hpp"
#include "sqgt/core.hpp"
#include "sqgt/gray.hpp"
#include "sqgt/io.hpp"
#include "sqgt/oracle.hpp"
#include "sqgt/refine.hpp"
#include "sqgt/sketch.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kBadParameters = 2;
constexpr int kIoError = 3;

std::vector<long long> parse_threshold_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

sqgt::OutcomeVector parse_outcome(const std::string& text) {
  sqgt::OutcomeVector levels;
  std::stringstream ss(text);
  int v;
  while (ss >> v) levels.push_back(v);
  return levels;
}

sqgt::PairPredicate parse_predicate(const std::string& text) {
  if (text == "all") return sqgt::pairs_all();
  if (text.rfind("far:", 0) == 0)
    return sqgt::pairs_at_distance_at_least(std::stoll(text.substr(4)));
  if (text.rfind("near:", 0) == 0)
    return sqgt::pairs_at_distance_below(std::stoll(text.substr(5)));
  throw sqgt::ParameterError("predicate must be all, far:DIST, or near:DIST");
}

void print_witness(const sqgt::CollisionWitness& w) {
  std::cout << "COLLISION head=" << w.a.head << " len=" << w.a.length << " vs head=" << w.b.head
            << " len=" << w.b.length << " outcome=";
  for (std::size_t i = 0; i < w.shared.size(); ++i)
    std::cout << (i ? " " : "") << w.shared[i];
  std::cout << "\n";
}

int run_selftest() {
  int failures = 0;
  auto expect = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    auto row = sqgt::m_pattern(6, sqgt::Thresholds({1, 2, 4}), 1, 56);
    std::string got;
    for (auto b : row) got += (b ? '1' : '0');
    expect(got ==
               "00000000000010000011000111111111111111000110000010000000",
           "m-pattern golden row");
  }
  {
    sqgt::BinaryMatrix b = sqgt::build_B(2, 7);
    auto rep = sqgt::check_B(b, 4);
    expect(b.rows() == 7 && b.cols() == 29 && rep.all(), "gray-block matrix conditions");
  }
  {
    sqgt::BinaryMatrix n8 = sqgt::build_N(8);
    std::vector<int> levels{1, 2, 1, 3};  // burst {2,3,4}
    auto b = sqgt::decode_N(levels, 8, 8);
    expect(n8.rows() == 4 && b && b->head == 2 && b->length == 3, "integer code decode");
  }
  {
    auto p = sqgt::paired_gray_matrix(3, 1);
    expect(p.rows[0] == std::vector<int>{0, 1, 2, 2, 1, 0}, "paired gray base");
  }
  return failures == 0 ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonadaptive SQGT schemes for locating a burst of positives"};
  app.require_subcommand(1);

  // build-fixed
  auto* fixed = app.add_subcommand("build-fixed", "Build a fixed-length-burst scheme (K over R)");
  long long fx_n = 0;
  int fx_h = 0, fx_c = 0;
  std::string fx_thresholds, fx_out;
  long long fx_cap = sqgt::kDefaultVerifyCap;
  fixed->set_help_flag("--help", "print help");  // frees -h/--h for the Gray digit count
  fixed->add_option("--n", fx_n, "population size")->required();
  fixed->add_option("--h", fx_h, "Gray digit count")->required();
  fixed->add_option("--c", fx_c, "block count (rows of the refinement matrix)")->required();
  fixed->add_option("--thresholds", fx_thresholds, "comma-separated thresholds")->required();
  fixed->add_option("--out", fx_out, "output path prefix")->required();
  fixed->add_option("--verify-cap", fx_cap, "max columns for exhaustive verification");

  // build-bounded
  auto* bounded = app.add_subcommand("build-bounded", "Build a bounded-length-burst scheme");
  long long bd_n = 0, bd_ell = 0;
  int bd_s = 0;
  std::string bd_out, bd_c1;
  bounded->add_option("--n", bd_n, "population size")->required();
  bounded->add_option("--ell", bd_ell, "maximum burst length")->required();
  bounded->add_option("--s", bd_s, "saturation level count")->required();
  bounded->add_option("--out", bd_out, "output path prefix")->required();
  bounded->add_option("--c1", bd_c1, "path to a user-supplied phase-1 matrix");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustively verify a scheme's distinguishability");
  std::string vf_scheme, vf_predicate = "all";
  int vf_jobs = 1;
  verify->add_option("--scheme", vf_scheme, "scheme path prefix")->required();
  verify->add_option("--predicate", vf_predicate, "all | far:DIST | near:DIST");
  verify->add_option("--jobs", vf_jobs, "worker threads");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Print the outcome of a burst");
  std::string sm_scheme;
  long long sm_head = 0, sm_len = 0;
  simulate->add_option("--scheme", sm_scheme)->required();
  simulate->add_option("--head", sm_head)->required();
  simulate->add_option("--len", sm_len, "burst length (defaults to the scheme's ell)");

  // decode
  auto* decode = app.add_subcommand("decode", "Decode an outcome back to a burst");
  std::string dc_scheme, dc_outcome;
  decode->add_option("--scheme", dc_scheme)->required();
  decode->add_option("--outcome", dc_outcome, "space-separated levels")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Print the counting-bound report as CSV");
  long long bn_n = 0, bn_ell = 0;
  int bn_s = 0;
  std::string bn_mode = "fixed";
  bounds->add_option("--n", bn_n)->required();
  bounds->add_option("--ell", bn_ell)->required();
  bounds->add_option("--s", bn_s)->required();
  bounds->add_option("--mode", bn_mode, "fixed | bounded");

  auto* selftest = app.add_subcommand("selftest", "Run the golden example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadParameters;
  }

  try {
    if (*fixed) {
      sqgt::Thresholds eta(parse_threshold_list(fx_thresholds));
      sqgt::Scheme scheme = sqgt::build_fixed_scheme(fx_n, fx_h, fx_c, eta, fx_cap);
      sqgt::save_scheme(scheme, sqgt::scheme_paths(fx_out));
      std::cout << "rows=" << scheme.matrix.rows() << " ell=" << scheme.mode.ell << "\n";
      for (const auto& note : scheme.notes) std::cout << "note: " << note << "\n";
      return kOk;
    }
    if (*bounded) {
      std::optional<sqgt::BinaryMatrix> c1;
      if (!bd_c1.empty()) c1 = sqgt::load_matrix(bd_c1);
      sqgt::Scheme scheme = sqgt::build_bounded_scheme(bd_n, bd_ell, bd_s, c1);
      sqgt::save_scheme(scheme, sqgt::scheme_paths(bd_out));
      std::cout << "rows=" << scheme.matrix.rows() << " ell=" << scheme.mode.ell << "\n";
      for (const auto& note : scheme.notes) std::cout << "note: " << note << "\n";
      return kOk;
    }
    if (*verify) {
      sqgt::Scheme scheme = sqgt::load_scheme(sqgt::scheme_paths(vf_scheme));
      auto w = sqgt::check_distinguishable(scheme.matrix, scheme.thresholds, scheme.mode,
                                           parse_predicate(vf_predicate), vf_jobs);
      if (w) {
        print_witness(*w);
        return kVerifyFailure;
      }
      std::cout << "OK\n";
      return kOk;
    }
    if (*simulate) {
      sqgt::Scheme scheme = sqgt::load_scheme(sqgt::scheme_paths(sm_scheme));
      long long len = simulate->count("--len") ? sm_len : scheme.mode.ell;
      auto levels = sqgt::outcome(scheme.matrix, scheme.thresholds, sqgt::Burst{sm_head, len});
      for (std::size_t i = 0; i < levels.size(); ++i)
        std::cout << (i ? " " : "") << levels[i];
      std::cout << "\n";
      return kOk;
    }
    if (*decode) {
      sqgt::Scheme scheme = sqgt::load_scheme(sqgt::scheme_paths(dc_scheme));
      sqgt::OutcomeVector levels = parse_outcome(dc_outcome);
      if (scheme.mode.kind == sqgt::Mode::Kind::Fixed) {
        bool all_zero = true;
        for (int l : levels) all_zero = all_zero && l == 0;
        if (all_zero) {
          std::cout << "NO_BURST\n";
          return kOk;
        }
        long long head = sqgt::decode_fixed(scheme, levels);
        std::cout << head << " " << scheme.mode.ell << "\n";
      } else {
        auto b = sqgt::decode_bounded(scheme, levels);
        if (!b)
          std::cout << "NO_BURST\n";
        else
          std::cout << b->head << " " << b->length << "\n";
      }
      return kOk;
    }
    if (*bounds) {
      auto mode = bn_mode == "bounded" ? sqgt::Mode::bounded(bn_ell) : sqgt::Mode::fixed(bn_ell);
      auto cb = sqgt::counting_bound(bn_n, bn_ell, bn_s, mode);
      std::cout << bn_n << "," << bn_ell << "," << bn_s << "," << bn_mode << "," << cb.bursts
                << "," << cb.min_tests << "," << cb.sketch_bound << "\n";
      return kOk;
    }
    if (*selftest) return run_selftest();
  } catch (const sqgt::UnverifiedConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_witness(e.witness);
    return kVerifyFailure;
  } catch (const sqgt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const sqgt::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParameters;
  } catch (const sqgt::InconsistentOutcomeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParameters;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParameters;
  }
  return kBadParameters;
}
