#include "ffv/bench.hpp"

#include <chrono>
#include <functional>
#include <utility>

#include <json.hpp>

#include "ffv/guards.hpp"
#include "ffv/lattice.hpp"
#include "ffv/schur.hpp"
#include "ffv/verify.hpp"

namespace ffv {

namespace {

BenchRow timed(const std::string& method, int m, int n,
               const std::function<Rational()>& eval) {
  BenchRow row{method, m, n, 0, "", 0, ""};
  Rational::watch_digits(true);
  const auto start = std::chrono::steady_clock::now();
  Rational value = eval();
  const auto stop = std::chrono::steady_clock::now();
  row.peak_digits = Rational::digit_watermark();
  Rational::watch_digits(false);
  row.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  row.value = value.str();
  return row;
}

BenchRow skipped(const std::string& method, int m, int n, const std::string& reason) {
  BenchRow row{method, m, n, 0, "", 0, reason};
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(std::uint64_t seed, int m, int n) {
  ModelParams params = random_params(seed, m, n);
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = m - n + j + 1;
  ParticleConfig config{m, x};
  config.validate();

  std::vector<BenchRow> rows;

  if (m <= 10 && n <= 5)
    rows.push_back(timed("bruteforce", m, n,
                         [&] { return enumerate_configurations(params, config); }));
  else
    rows.push_back(skipped("bruteforce", m, n, "size guard (M <= 10, N <= 5)"));

  if (m <= 62 && binomial(m, n) <= 2'000'000ULL)
    rows.push_back(timed("lattice", m, n, [&] { return projected_wavefunction(params, config); }));
  else
    rows.push_back(skipped("lattice", m, n, "size guard (sector dimension)"));

  rows.push_back(timed("determinant", m, n, [&] { return theorem_rhs(params, config); }));

  if (n <= 9)
    rows.push_back(timed("symsum", m, n, [&] {
      return exchange_prefactor(params.z, params.t) * generalized_schur_sum(params, config);
    }));
  else
    rows.push_back(skipped("symsum", m, n, "size guard (N <= 9)"));

  return rows;
}

std::string to_json_line(const BenchRow& row) {
  nlohmann::json j;
  j["method"] = row.method;
  j["m"] = row.m;
  j["n"] = row.n;
  j["micros"] = row.micros;
  j["value"] = row.value;
  j["peak_digits"] = row.peak_digits;
  j["skipped"] = row.skipped;
  return j.dump();
}

}  // namespace ffv
