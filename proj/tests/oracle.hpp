#pragma once

// Brute-force references used only by the tests.

#include <cstdint>
#include <vector>

#include "ek/joint_histogram.hpp"

namespace ek::oracle {

struct OmegaPair {
  int full = 0;
  int truncated = 0;
};

/// omega(n) and omega(n, w) by trial division.
inline OmegaPair omega_by_trial_division(std::uint64_t n, std::uint64_t w) {
  OmegaPair out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    ++out.full;
    out.truncated += d <= w ? 1 : 0;
    while (n % d == 0)
      n /= d;
  }
  if (n > 1) {
    ++out.full;
    out.truncated += n <= w ? 1 : 0;
  }
  return out;
}

inline bool is_prime_by_trial_division(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// The joint histogram built one n at a time from trial-division factorisations.
inline JointHistogram histogram_by_trial_division(std::uint64_t x, std::uint64_t w) {
  JointHistogram h(x, w);
  OmegaPair prev{0, 0}; // n - 1 = 1
  for (std::uint64_t n = 2; n <= x; ++n) {
    const OmegaPair cur = omega_by_trial_division(n, w);
    ++h.at(cur.full, prev.truncated, prev.full);
    prev = cur;
  }
  return h;
}

} // namespace ek::oracle
