#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "ek/prime_basis.hpp"
#include "ek/special_functions.hpp"

namespace ek {

enum class TailPolicy {
  none,
  /// Fit log(factor) ~ c2 / p^2 on the last decade of primes below the
  /// cutoff and add c2 * sum_{p > cutoff} p^-2.
  second_order_estimate,
};

struct EulerProductConfig {
  static constexpr std::uint64_t min_cutoff = 1'000;

  std::uint64_t prime_cutoff = 100'000;
  TailPolicy tail_policy = TailPolicy::second_order_estimate;
  std::shared_ptr<const PrimeBasis> basis;

  /// Config with a freshly built basis reaching exactly `cutoff`.
  static EulerProductConfig with_cutoff(std::uint64_t cutoff,
                                        TailPolicy policy = TailPolicy::second_order_estimate);

  /// Throws ConfigError unless cutoff >= 10^3 and the basis reaches it.
  void validate() const;
};

/// One Euler factor, carried as its logarithm so that factors of size
/// 1 + O(1/p^2) keep their precision.
struct LocalFactor {
  Complex log_value{};
  bool vanishes = false;

  static LocalFactor zero() { return {0.0, true}; }
  static LocalFactor from_value(Complex value);
};

using LocalFactorFn = std::function<LocalFactor(std::uint64_t p)>;

/// Product of factor(p) over primes p <= cfg.prime_cutoff, times the tail
/// estimate selected by cfg.tail_policy. Exactly 0 if any factor vanishes.
/// Throws DivergenceError when |log factor(p)| * p^2 grows across the last two
/// decades of primes (factor not 1 + O(1/p^2)).
Complex euler_product(const LocalFactorFn& factor, const EulerProductConfig& cfg);

/// sum_{p > X} p^-2, approximated by E1(log X).
double prime_square_tail(double cutoff);

} // namespace ek
