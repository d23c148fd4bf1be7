#include "ek/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ek/errors.hpp"

namespace ek {
namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_non_positive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Gamma(z) for Re z >= 1/2.
Complex lanczos(Complex z) {
  z -= 1.0;
  Complex sum = lanczos_coef[0];
  for (std::size_t i = 1; i < lanczos_coef.size(); ++i)
    sum += lanczos_coef[i] / (z + static_cast<double>(i));
  const Complex t = z + lanczos_g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

// Exact factorials for small positive integer arguments.
bool small_integer(Complex z, double& value) {
  if (z.imag() != 0.0 || z.real() < 1.0 || z.real() > 23.0 || z.real() != std::floor(z.real()))
    return false;
  value = 1.0;
  for (int i = 2; i < static_cast<int>(z.real()); ++i)
    value *= i;
  return true;
}

} // namespace

double phi(double y) { return 0.5 * std::erfc(-y / std::sqrt(2.0)); }

double iterated_log2(double x) {
  if (!(x > 1.0))
    throw DomainError("log log x needs x > 1");
  return std::log(std::log(x));
}

double iterated_log3(double x) {
  if (!(x > std::exp(1.0)))
    throw DomainError("log log log x needs x > e");
  return std::log(std::log(std::log(x)));
}

Complex gamma_fn(Complex z) {
  if (is_non_positive_integer(z))
    throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
  if (double f; small_integer(z, f))
    return f;
  if (z.real() < 0.5)
    return pi / (std::sin(pi * z) * lanczos(1.0 - z));
  return lanczos(z);
}

Complex reciprocal_gamma(Complex z) {
  if (is_non_positive_integer(z))
    return 0.0;
  if (double f; small_integer(z, f))
    return 1.0 / f;
  if (z.real() < 0.5)
    return std::sin(pi * z) * lanczos(1.0 - z) / pi;
  return 1.0 / lanczos(z);
}

Complex log1p(Complex u) {
  const double a = u.real();
  const double b = u.imag();
  if (std::abs(u) > 0.5)
    return std::log(1.0 + u);
  // |1 + u|^2 = 1 + (2a + a^2 + b^2)
  return {0.5 * std::log1p(2.0 * a + a * a + b * b), std::atan2(b, 1.0 + a)};
}

} // namespace ek
