#pragma once

#include <complex>
#include <cstdint>

namespace ek {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double pi = 3.14159265358979323846;

/// Standard normal CDF, computed as erfc(-y / sqrt 2) / 2.
double phi(double y);

/// log log x, for x > 1.
double iterated_log2(double x);
/// log log log x, for x > e.
double iterated_log3(double x);

/// Gamma function (Lanczos, g = 7, with reflection for Re z < 1/2).
/// Throws PoleError at non-positive integers.
Complex gamma_fn(Complex z);

/// 1 / Gamma(z); entire, exactly 0 at non-positive integers.
Complex reciprocal_gamma(Complex z);

/// log(1 + u) without cancellation for small |u|.
Complex log1p(Complex u);

} // namespace ek
