#include "ek/euler_product.hpp"

#include <cmath>
#include <string>

#include "ek/errors.hpp"

namespace ek {

EulerProductConfig EulerProductConfig::with_cutoff(std::uint64_t cutoff, TailPolicy policy) {
  EulerProductConfig cfg;
  cfg.prime_cutoff = cutoff;
  cfg.tail_policy = policy;
  cfg.basis = std::make_shared<const PrimeBasis>(PrimeBasis::build(cutoff));
  cfg.validate();
  return cfg;
}

void EulerProductConfig::validate() const {
  if (prime_cutoff < min_cutoff)
    throw ConfigError("prime_cutoff must be at least 1000, got " + std::to_string(prime_cutoff));
  if (!basis || basis->limit() < prime_cutoff)
    throw ConfigError("prime basis does not reach prime_cutoff " + std::to_string(prime_cutoff));
}

LocalFactor LocalFactor::from_value(Complex value) {
  if (value == 0.0)
    return zero();
  return {ek::log1p(value - 1.0), false};
}

double prime_square_tail(double cutoff) {
  // E1(u) = -Ei(-u)
  return -std::expint(-std::log(cutoff));
}

Complex euler_product(const LocalFactorFn& factor, const EulerProductConfig& cfg) {
  cfg.validate();
  const double cutoff = static_cast<double>(cfg.prime_cutoff);
  const double late_from = cutoff / 10.0;
  const double early_from = cutoff / 100.0;

  Complex log_sum = 0.0;
  Complex c2_sum = 0.0;
  double late_scale = 0.0, early_scale = 0.0, late_abs = 0.0;
  std::size_t late_n = 0, early_n = 0;

  for (const std::uint64_t p : cfg.basis->primes()) {
    if (p > cfg.prime_cutoff)
      break;
    const LocalFactor f = factor(p);
    if (f.vanishes)
      return 0.0;
    log_sum += f.log_value;

    const double pd = static_cast<double>(p);
    const Complex scaled = f.log_value * pd * pd;
    if (pd > late_from) {
      c2_sum += scaled;
      late_scale += std::abs(scaled);
      late_abs += std::abs(f.log_value);
      ++late_n;
    } else if (pd > early_from) {
      early_scale += std::abs(scaled);
      ++early_n;
    }
  }

  // Factors within rounding of 1 carry no growth information.
  constexpr double rounding_floor = 1e-13;
  if (late_n > 0 && early_n > 0 && late_abs / static_cast<double>(late_n) > rounding_floor) {
    const double late = late_scale / static_cast<double>(late_n);
    const double early = early_scale / static_cast<double>(early_n);
    if (late > 3.0 * early + 1e-9)
      throw DivergenceError("Euler factors are not 1 + O(1/p^2): |log f(p)| p^2 grew from " +
                            std::to_string(early) + " to " + std::to_string(late));
  }

  if (cfg.tail_policy == TailPolicy::second_order_estimate && late_n > 0)
    log_sum += c2_sum / static_cast<double>(late_n) * prime_square_tail(cutoff);
  return std::exp(log_sum);
}

} // namespace ek
