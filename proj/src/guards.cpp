#include "ffv/guards.hpp"

#include <algorithm>

namespace ffv {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t cap = UINT64_MAX / 2;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / static_cast<std::uint64_t>(n)) return cap;
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace ffv
