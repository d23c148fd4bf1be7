#include "ek/prime_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ek/errors.hpp"

namespace ek {

PrimeBasis PrimeBasis::build(std::uint64_t limit) {
  if (limit < 2 || limit > max_limit)
    throw ConfigError("prime basis limit must lie in [2, 10^9], got " +
                      std::to_string(limit));

  // composite[i] describes the odd number 2i + 1
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i])
      continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p)
      composite[j] = true;
  }

  std::vector<std::uint32_t> primes;
  primes.reserve(limit > 100 ? static_cast<std::size_t>(1.3 * limit / std::log(limit)) : 32);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i)
    if (!composite[i])
      primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  return PrimeBasis(limit, std::move(primes));
}

std::size_t PrimeBasis::count_up_to(std::uint64_t bound) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), bound) - primes_.begin());
}

} // namespace ek
