#pragma once

#include <cstdint>
#include <stdexcept>

namespace ffv {

/// Thrown when an evaluation would exceed its size guard.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient, saturating at UINT64_MAX / 2 to stay overflow-safe
/// in guard arithmetic.
std::uint64_t binomial(int n, int k);

}  // namespace ffv
