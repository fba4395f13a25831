#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffv/verify.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using ffv::CheckReport;
using ffv::ModelParams;
using ffv::ParticleConfig;
using ffv::Rational;
using ffv::SuiteOptions;

namespace {

std::vector<std::string> to_lines(const std::vector<CheckReport>& reports) {
  std::vector<std::string> lines;
  for (const CheckReport& r : reports) lines.push_back(ffv::to_json_line(r));
  return lines;
}

}  // namespace

TEST_CASE("seeded parameter points avoid the rejected degeneracies") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ModelParams p = ffv::random_params(seed, 5, 3);
    REQUIRE(p.m() == 5);
    REQUIRE(p.n() == 3);
    for (std::size_t j = 0; j < p.z.size(); ++j) {
      CHECK(!p.z[j].is_zero());
      for (std::size_t k = j + 1; k < p.z.size(); ++k) {
        CHECK(p.z[j] != p.z[k]);
        CHECK(!(p.z[j] + p.t * p.z[k]).is_zero());
        CHECK(!(p.z[k] + p.t * p.z[j]).is_zero());
      }
    }
    for (const ffv::Site& s : p.sites) {
      CHECK(!s.w.is_zero());
      for (const Rational& z : p.z) {
        CHECK(s.w != s.gamma * z);
        CHECK(!((Rational(1) - s.alpha * s.gamma) * z + s.alpha * s.w).is_zero());
      }
    }
  }
}

TEST_CASE("seeded probe states") {
  ffv::SectorState s = ffv::random_probe(0x1234ULL, 6, 2);
  CHECK(s.m == 6);
  CHECK(s.particles == 2);
  CHECK(!s.coeff.empty());
  CHECK(s.coeff.size() <= 2);
  for (const auto& [key, value] : s.coeff) {
    int bits = 0;
    for (std::uint64_t v = key; v; v >>= 1) bits += static_cast<int>(v & 1);
    CHECK(bits == 2);
    CHECK(!value.is_zero());
  }
}

TEST_CASE("individual checks pass at seeded points") {
  CHECK(ffv::check_rll_point(7).pass);

  ModelParams p = ffv::random_params(0xa1ULL, 4, 2);
  ParticleConfig inner{4, {1, 3}};
  ParticleConfig pinned{4, {2, 4}};

  CHECK(ffv::check_degree(p, inner, 0xa1ULL).pass);
  CHECK(ffv::check_degree(p, pinned, 0xa1ULL).pass);
  CHECK(ffv::check_exchange(p, inner, {0, 1}).pass);
  CHECK(ffv::check_exchange(p, inner, {1, 0}).pass);
  CHECK(ffv::check_recursion_top(p, pinned).pass);
  CHECK(ffv::check_vanishing(p, pinned).pass);
  CHECK(ffv::check_factorization(p, inner).pass);
  CHECK(ffv::check_theorem(p, inner).pass);
  CHECK(ffv::check_uniqueness(p, pinned, 0xa1ULL).pass);
  CHECK(ffv::check_commutation(p, p.z[0], p.z[1], ffv::vacuum_state(4)).pass);
  CHECK(ffv::check_commutation(p, p.z[0], p.z[0], ffv::vacuum_state(4)).pass);

  ModelParams q = ffv::random_params(0xb2ULL, 4, 1);
  CHECK(ffv::check_initial(q).pass);

  ModelParams c = ffv::random_params(0xc3ULL, 1, 3);
  CHECK(ffv::check_column(c, 1).pass);
  CHECK(ffv::check_column(c, 2).pass);
  CHECK(ffv::check_column(c, 3).pass);

  ModelParams t3 = ffv::random_params(0xd4ULL, 5, 3);
  CHECK(ffv::check_exchange(t3, ParticleConfig{5, {1, 3, 4}}, {1, 2, 0}).pass);
}

TEST_CASE("degree check recovers from degenerate points") {
  SUBCASE("last column empty, truncated wavefunction forced to zero") {
    ModelParams p = ffv::random_params(0xe5ULL, 2, 1);
    p.sites[0].w = Rational(0);  // kills the one-column wavefunction identically
    CheckReport r = ffv::check_degree(p, ParticleConfig{2, {1}}, 0xe5ULL);
    CHECK(r.pass);
    CHECK(r.params.find("retries=") != std::string::npos);
  }

  SUBCASE("last column occupied, leading coefficient cancels") {
    // Point found by sweep: the full-box wavefunction drops to degree N-1.
    ModelParams p;
    p.t = Rational(5, 3);
    p.z = {Rational(2, 7), Rational(3, 4), Rational(2, 3)};
    p.sites = {ffv::Site{Rational(-1), Rational(1, 4), Rational(-4, 5)},
               ffv::Site{Rational(-1, 2), Rational(1), Rational(1)},
               ffv::Site{Rational(1, 2), Rational(-7, 4), Rational(7, 6)}};
    CheckReport r = ffv::check_degree(p, ParticleConfig{3, {1, 2, 3}}, 0xf6ULL);
    CHECK(r.pass);
    CHECK(r.params.find("retries=") != std::string::npos);
  }
}

TEST_CASE("structured report lines parse back") {
  SuiteOptions opt;
  opt.seed = 3;
  opt.max_m = 3;
  opt.max_n = 2;
  opt.points = 2;
  std::vector<CheckReport> reports = ffv::run_suite(opt);
  REQUIRE(!reports.empty());
  CHECK(ffv::all_pass(reports));

  std::set<std::string> properties;
  for (const CheckReport& r : reports) {
    nlohmann::json j = nlohmann::json::parse(ffv::to_json_line(r));
    CHECK(j["property"].get<std::string>() == r.property);
    CHECK(j["m"].get<int>() == r.m);
    CHECK(j["n"].get<int>() == r.n);
    CHECK(j["x"].get<std::vector<int>>() == r.x);
    CHECK(j["seed"].get<std::uint64_t>() == r.seed);
    CHECK(j["point"].get<int>() == r.point);
    CHECK(j["pass"].get<bool>() == r.pass);
    CHECK(j["lhs"].get<std::string>() == r.lhs);
    CHECK(j["rhs"].get<std::string>() == r.rhs);
    CHECK(j["params"].get<std::string>() == r.params);
    properties.insert(r.property);
  }
  // every suite contributes at these bounds
  for (const char* name : {"rll", "degree", "exchange", "recursion", "vanishing",
                           "factorization", "initial", "theorem", "commutation", "column",
                           "uniqueness"})
    CHECK(properties.count(name) == 1);
}

TEST_CASE("suite runs are deterministic") {
  SuiteOptions opt;
  opt.seed = 11;
  opt.max_m = 3;
  opt.max_n = 2;
  opt.points = 2;
  std::vector<std::string> first = to_lines(ffv::run_suite(opt));
  std::vector<std::string> second = to_lines(ffv::run_suite(opt));
  CHECK(first == second);

  SUBCASE("parallel and serial sweeps emit identical reports") {
    SuiteOptions serial = opt;
    serial.parallel = false;
    CHECK(to_lines(ffv::run_suite(serial)) == first);
  }

  SUBCASE("tighter bounds give a subset of the reports") {
    SuiteOptions small = opt;
    small.max_m = 2;
    small.max_n = 1;
    std::set<std::string> big(first.begin(), first.end());
    for (const std::string& line : to_lines(ffv::run_suite(small)))
      CHECK(big.count(line) == 1);
  }
}

TEST_CASE("suite selection") {
  SuiteOptions opt;
  opt.seed = 5;
  opt.max_m = 2;
  opt.max_n = 1;
  opt.points = 1;

  opt.suite = "rll";
  for (const CheckReport& r : ffv::run_suite(opt)) CHECK(r.property == "rll");

  opt.suite = "characterization";
  opt.max_m = 3;
  opt.max_n = 2;  // exchange cases need two spectral parameters
  std::set<std::string> seen;
  for (const CheckReport& r : ffv::run_suite(opt)) seen.insert(r.property);
  CHECK(seen ==
        std::set<std::string>{"degree", "exchange", "recursion", "vanishing", "factorization",
                              "initial"});
  opt.max_m = 2;
  opt.max_n = 1;

  opt.suite = "column,commutation";
  seen.clear();
  for (const CheckReport& r : ffv::run_suite(opt)) seen.insert(r.property);
  CHECK(seen == std::set<std::string>{"column", "commutation"});

  opt.suite = "nonsense";
  CHECK_THROWS_AS(ffv::run_suite(opt), std::invalid_argument);
}

TEST_CASE("report aggregation") {
  CHECK(ffv::all_pass({}));
  CheckReport good;
  good.pass = true;
  CheckReport bad;
  bad.pass = false;
  CHECK(ffv::all_pass({good, good}));
  CHECK(!ffv::all_pass({good, bad}));
}
