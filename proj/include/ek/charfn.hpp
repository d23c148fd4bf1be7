#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ek/euler_product.hpp"
#include "ek/joint_histogram.hpp"
#include "ek/special_functions.hpp"

namespace ek {

/// f_k(z) = sum_{n in E_k(x)} z^{omega(n - 1, w)} with exact integer
/// coefficients: coeffs[l] = pi_{k,l}(x, w).
struct GenPolynomial {
  int k = 0;
  std::uint64_t x = 0;
  std::uint64_t w = 0;
  std::vector<std::uint64_t> coeffs; // trailing zeros trimmed, never empty

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
  std::uint64_t mass() const noexcept;
};

GenPolynomial gen_polynomial(const JointHistogram& h, int k);

/// Horner evaluation.
Complex eval(const GenPolynomial& poly, Complex z);

/// c_l = (1/L) sum_{j < L} f(e^{2 pi i j / L}) e^{-2 pi i j l / L}, l < L.
/// Throws AliasingError unless L > degree.
std::vector<double> coeffs_by_roots_of_unity(const GenPolynomial& poly, int L);

struct CharFnSample {
  double t = 0.0;
  Complex exact;     // e^{-i t sqrt T} f_k(e^{i t / sqrt T})
  Complex predicted; // e^{-it sqrt T} pi_k (log w)^{z-1} {h_k(z) + r xi(z) / log log x}
  double T = 0.0;
};

/// Samples of the normalised characteristic function against its analytic
/// prediction; the xi term is included when `with_xi`. Requires T > 0 and
/// |t| <= sqrt T for every t.
std::vector<CharFnSample> charfn_samples(const GenPolynomial& poly, double T,
                                         std::span<const double> ts, bool with_xi,
                                         const EulerProductConfig& cfg);

/// Adaptive Simpson on [a, b] with relative tolerance and bounded depth.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-6, int max_depth = 30);

/// Lower cut of the dt/|t| integral; the integrand is bounded near 0.
inline constexpr double berry_esseen_epsilon = 1e-6;

/// int_{eps <= |t| <= sqrt T} |e^{-i t sqrt T} f_k(e^{i t/sqrt T}) - pi_k e^{-t^2/2}| dt/|t|,
/// computed on t > 0 and doubled (the integrand is even).
double berry_esseen_integral(const GenPolynomial& poly, double T, std::uint64_t pi_k);

} // namespace ek
