// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every equality below is exact rational equality; runtime budgets are part
// of the criterion.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "ffv/bench.hpp"
#include "ffv/lattice.hpp"
#include "ffv/schur.hpp"
#include "ffv/verify.hpp"

using ffv::ModelParams;
using ffv::Partition;
using ffv::ParticleConfig;
using ffv::Rational;
using ffv::Site;

namespace {

struct Criterion {
  const char* label;
  long long budget_ms;
  bool (*run)(std::string& note);
};

std::vector<std::vector<int>> all_configs(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == m - (n - 1 - i)) --i;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      x[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k - 1)] + 1;
  }
  return out;
}

bool run_selected_suite(const std::string& suite, int max_m, int max_n, int points,
                        std::string& note) {
  ffv::SuiteOptions opt;
  opt.seed = 1;
  opt.max_m = max_m;
  opt.max_n = max_n;
  opt.points = points;
  opt.suite = suite;
  std::vector<ffv::CheckReport> reports = ffv::run_suite(opt);
  int failed = 0;
  for (const ffv::CheckReport& r : reports)
    if (!r.pass) ++failed;
  note = std::to_string(reports.size() - static_cast<std::size_t>(failed)) + "/" +
         std::to_string(reports.size()) + " checks";
  if (reports.empty()) {
    note = "no checks ran";
    return false;
  }
  return failed == 0;
}

// 1. Enumeration, transfer and closed form agree on every configuration.
bool criterion_triple(std::string& note) {
  return run_selected_suite("theorem", 6, 3, 5, note);
}

// 2. The RLL identity holds at 20 seeded points.
bool criterion_rll(std::string& note) {
  int pass = 0;
  for (std::uint64_t point = 0; point < 20; ++point)
    if (ffv::check_rll_point(ffv::mix_seed(1, point)).pass) ++pass;
  note = std::to_string(pass) + "/20 points";
  return pass == 20;
}

// 3. The six characterizing properties hold across the sweep.
bool criterion_characterization(std::string& note) {
  return run_selected_suite("characterization", 6, 3, 5, note);
}

// 4. Operator commutation and the single-column amplitude.
bool criterion_operators(std::string& note) {
  return run_selected_suite("commutation,column", 6, 4, 10, note);
}

// 5. Specialization chain: factorial Schur, then Schur.
bool criterion_specializations(std::string& note) {
  const int n = 3, m = 6;
  int checked = 0;
  for (std::uint64_t point = 0; point < 5; ++point) {
    ModelParams p = ffv::random_params(ffv::mix_seed(2, point), m, n);
    std::vector<Rational> shifts;
    for (Site& s : p.sites) {
      s.w = Rational(1);
      s.gamma = Rational(0);
      shifts.push_back(s.alpha);
    }
    ModelParams plain = p;
    for (Site& s : plain.sites) s.alpha = Rational(0);

    for (int l1 = 0; l1 <= 3; ++l1)
      for (int l2 = 0; l2 <= l1; ++l2)
        for (int l3 = 0; l3 <= l2; ++l3) {
          Partition lambda{{l1, l2, l3}};
          if (ffv::generalized_schur_det(p, lambda) !=
              ffv::factorial_schur_oracle(p.z, shifts, lambda)) {
            note = "factorial mismatch at point " + std::to_string(point);
            return false;
          }
          if (ffv::generalized_schur_det(plain, lambda) !=
              ffv::schur_oracle(plain.z, lambda)) {
            note = "schur mismatch at point " + std::to_string(point);
            return false;
          }
          ++checked;
        }
  }
  note = std::to_string(checked) + " shape evaluations";
  return true;
}

// 6. The symmetrized sum equals the bialternant on every configuration.
bool criterion_formulas(std::string& note) {
  int checked = 0;
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= (m < 5 ? m : 5); ++n)
      for (const auto& x : all_configs(m, n)) {
        ParticleConfig config{m, x};
        Partition lambda = ffv::config_to_partition(config);
        for (std::uint64_t point = 0; point < 3; ++point) {
          std::uint64_t seed = ffv::mix_seed(3, ffv::mix_seed(config.mask(), point));
          ModelParams p = ffv::random_params(seed, m, n);
          if (ffv::generalized_schur_sum(p, config) != ffv::generalized_schur_det(p, lambda)) {
            note = "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n);
            return false;
          }
          ++checked;
        }
      }
  note = std::to_string(checked) + " configuration points";
  return true;
}

// 7. Lagrange reconstruction through the characterizing points.
bool criterion_uniqueness(std::string& note) {
  return run_selected_suite("uniqueness", 5, 3, 5, note);
}

// 8. The closed form scales and the determinant beats brute force.
bool criterion_performance(std::string& note) {
  using clock = std::chrono::steady_clock;

  ModelParams p = ffv::random_params(4, 40, 10);
  std::vector<int> x;
  for (int j = 31; j <= 40; ++j) x.push_back(j);
  auto t0 = clock::now();
  Rational value = ffv::theorem_rhs(p, ParticleConfig{40, x});
  auto large_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  if (value.is_zero()) {
    note = "degenerate large evaluation";
    return false;
  }
  if (large_ms >= 1000) {
    note = "large closed form took " + std::to_string(large_ms) + " ms";
    return false;
  }

  std::vector<ffv::BenchRow> rows = ffv::run_bench(5, 8, 4);
  long long brute = -1, det = -1;
  std::string brute_value, det_value;
  for (const ffv::BenchRow& r : rows) {
    if (r.method == "bruteforce" && r.skipped.empty()) {
      brute = r.micros;
      brute_value = r.value;
    }
    if (r.method == "determinant" && r.skipped.empty()) {
      det = r.micros;
      det_value = r.value;
    }
  }
  if (brute < 0 || det < 0) {
    note = "bench rows missing";
    return false;
  }
  if (brute_value != det_value) {
    note = "bench value mismatch";
    return false;
  }
  if (det >= brute) {
    note = "determinant " + std::to_string(det) + " us vs brute force " +
           std::to_string(brute) + " us";
    return false;
  }
  note = "closed form M=40 N=10 in " + std::to_string(large_ms) + " ms; determinant " +
         std::to_string(det) + " us vs brute force " + std::to_string(brute) + " us";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"triple agreement across evaluation methods (M<=6, N<=3, 5 points)", 60000,
       criterion_triple},
      {"RLL relation at 20 seeded points", 1000, criterion_rll},
      {"degree/exchange/recursion/vanishing/factorization/initial sweep", 60000,
       criterion_characterization},
      {"B-operator commutation and column amplitude (N<=4, 10 points)", 10000,
       criterion_operators},
      {"factorial Schur and Schur specializations (3x3 box, N=3)", 30000,
       criterion_specializations},
      {"symmetrized sum vs bialternant (M<=7, N<=5, 3 points)", 60000, criterion_formulas},
      {"uniqueness via Lagrange reconstruction (M<=5, N<=3)", 10000, criterion_uniqueness},
      {"performance sanity (M=40 closed form; determinant vs brute force)", 30000,
       criterion_performance},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ms > c.budget_ms) {
      ok = false;
      note += (note.empty() ? "" : "; ") + std::string("over budget ") +
              std::to_string(c.budget_ms) + " ms";
    }
    std::printf("%s  %zu. %s [%s] (%lld ms)\n", ok ? "PASS" : "FAIL", i + 1, c.label,
                note.c_str(), static_cast<long long>(ms));
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
