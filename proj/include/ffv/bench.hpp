#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffv {

/// One timed evaluation. Timing rows are measurements only; the value column
/// is exact and must agree across methods whenever several ran.
struct BenchRow {
  std::string method;
  int m = 0;
  int n = 0;
  long long micros = 0;
  std::string value;        // exact "p/q"; empty when skipped
  std::size_t peak_digits;  // high-water mark of digit counts during the run
  std::string skipped;      // guard name when the method refused the size
};

/// Evaluates the wavefunction at seeded parameters of the given size by
/// every method: bruteforce (grid enumeration), lattice (operator transfer),
/// determinant (closed form), symsum (symmetrized sum). Methods whose size
/// guard trips emit a skipped row rather than an error.
std::vector<BenchRow> run_bench(std::uint64_t seed, int m, int n);

std::string to_json_line(const BenchRow& row);

}  // namespace ffv
