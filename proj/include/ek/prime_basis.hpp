#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ek {

/// All primes up to `limit`, ascending. Immutable once built.
class PrimeBasis {
public:
  static constexpr std::uint64_t max_limit = 1'000'000'000;

  /// Sieve of Eratosthenes over odd numbers. Throws ConfigError unless
  /// 2 <= limit <= 10^9.
  static PrimeBasis build(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }

  /// Number of primes <= bound (bound may exceed limit; then all primes).
  std::size_t count_up_to(std::uint64_t bound) const noexcept;

private:
  PrimeBasis(std::uint64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeBasis build_prime_basis(std::uint64_t limit) {
  return PrimeBasis::build(limit);
}

} // namespace ek
