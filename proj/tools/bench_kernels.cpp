// Times the two concurrency-enabled kernels against their serial reference
// paths and checks that both produce identical values, as exact arithmetic
// demands.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ffv/lattice.hpp"
#include "ffv/schur.hpp"
#include "ffv/verify.hpp"

namespace {

long long time_us(const std::function<void()>& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

void print_row(const std::string& kernel, long long serial_us, long long parallel_us,
               bool equal) {
  std::cout << kernel << std::string(28 - std::min<std::size_t>(27, kernel.size()), ' ')
            << "serial " << serial_us << " us   parallel " << parallel_us << " us   "
            << (equal ? "values identical" : "VALUE MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  bool all_equal = true;

  {
    const int m = 12, n = 8;
    ffv::ModelParams params = ffv::random_params(seed, m, n);
    std::vector<int> x;
    for (int j = 0; j < n; ++j) x.push_back(m - n + j + 1);
    ffv::ParticleConfig config{m, x};

    ffv::Rational serial_value, parallel_value;
    const long long serial_us =
        time_us([&] { serial_value = ffv::generalized_schur_sum(params, config, false); });
    const long long parallel_us =
        time_us([&] { parallel_value = ffv::generalized_schur_sum(params, config, true); });
    const bool equal = serial_value == parallel_value;
    all_equal = all_equal && equal;
    print_row("symmetrized sum (N=8)", serial_us, parallel_us, equal);
  }

  {
    ffv::SuiteOptions options;
    options.seed = seed;
    options.max_m = 5;
    options.max_n = 3;
    options.points = 3;
    options.suite = "theorem";

    std::vector<ffv::CheckReport> serial_reports, parallel_reports;
    options.parallel = false;
    const long long serial_us = time_us([&] { serial_reports = ffv::run_suite(options); });
    options.parallel = true;
    const long long parallel_us = time_us([&] { parallel_reports = ffv::run_suite(options); });

    bool equal = serial_reports.size() == parallel_reports.size();
    for (std::size_t i = 0; equal && i < serial_reports.size(); ++i)
      equal = ffv::to_json_line(serial_reports[i]) == ffv::to_json_line(parallel_reports[i]);
    all_equal = all_equal && equal;
    print_row("verification sweep", serial_us, parallel_us, equal);
  }

  return all_equal ? 0 : 1;
}
