#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ek/cauchy.hpp"
#include "ek/euler_product.hpp"
#include "ek/special_functions.hpp"

namespace ek {

/// Radius used for Cauchy derivatives in the r variable; every function of r
/// below is entire there.
inline constexpr double derivative_radius = 0.25;

/// Largest r = (k - 1) / log log x accepted by the Euler-product functions.
inline constexpr double max_r = 30.0;

/// The singular series of the pair (n, n - 1):
///   e^{gamma (z - 1)} prod_p (1 + (z - 1) / (p + r - 1)) (1 - 1/p)^{z - 1},
/// with r = (k - 1) / log log x. Requires 0 <= r <= 30.
Complex h_k(double r, Complex z, const EulerProductConfig& cfg);

/// Sathe-Selberg function (1 / Gamma(z + 1)) prod_p (1 + z/(p - 1)) (1 - 1/p)^z.
Complex lambda_unit(Complex z, const EulerProductConfig& cfg);

/// prod_{p <= w} (1 + r / (p + z - 2)) (1 - 1/p)^r
///   * prod_{p > w} (1 + r / (p - 1)) (1 - 1/p)^r,
/// times 1 / Gamma(r + 1) when gamma_normalized. Throws PoleError naming the
/// prime when p + z - 2 = 0 for some p <= w.
Complex lambda_w(Complex z, Complex r, std::uint64_t w, const EulerProductConfig& cfg,
                 bool gamma_normalized = true);

/// Correction function of the two-term expansion of f_k(z):
///   xi(z) = h_k(z) L''(r) / (2 L(r))
///         - lambda_z''(r) (log w)^{1 - z} prod_{p <= w} (1 + (z - 1)/(p - 1)) / (2 L(r)),
/// with L = lambda_unit. The pole of lambda_z at p + z - 2 = 0 is cancelled
/// against the zero of the finite product before differentiating, so xi is
/// evaluated as the entire function it is.
class XiEvaluator {
public:
  XiEvaluator(std::uint64_t x, std::uint64_t w, int k, EulerProductConfig cfg);

  Complex operator()(Complex z) const;

  double r() const noexcept { return r_; }

private:
  // prod_{p<=w} (1 + (z-1+r)/(p-1)) (1-1/p)^{z-1+r}
  Complex head(Complex z, Complex r) const;

  std::uint64_t w_;
  EulerProductConfig cfg_;
  double r_;
  double log_log_w_;
  double mertens_sum_; // sum_{p <= w} log(1 - 1/p)
  Complex lambda1_;
  Complex lambda1_dd_;
  std::vector<Complex> nodes_; // Cauchy nodes around r
  // (1/Gamma(r+1)) prod_{p>w} (1 + r/(p-1)) (1-1/p)^r at each node
  std::vector<Complex> tail_at_nodes_;
};

Complex xi(Complex z, std::uint64_t x, std::uint64_t w, int k, const EulerProductConfig& cfg);

/// (e^gamma log w)^{z - 1} prod_{p <= w} (1 - 1/p)^{z - 1}; tends to 1 as w grows.
/// Requires 16 <= w <= basis limit.
Complex mertens_check(std::uint64_t w, Complex z, const EulerProductConfig& cfg);

/// sum_{p <= w} log(1 - 1/p); beyond the basis limit the remainder is
/// extrapolated with Mertens' theorem.
double mertens_log_sum(std::uint64_t w, const PrimeBasis& basis);

struct PiKPrediction {
  double main = 0.0;
  double correction = 0.0;
  /// k > 3 log log x, where the expansion is not expected to hold.
  bool outside_validity_band = false;

  double total() const noexcept { return main + correction; }
};

/// Two-term Sathe-Selberg estimate of pi_k(x):
///   x/log x * (log log x)^{k-1}/(k-1)! * {L(r) - r L''(r) / (2 log log x)}.
/// Requires x >= 100 and k >= 1.
PiKPrediction predict_pi_k(std::uint64_t x, int k, const EulerProductConfig& cfg);

/// Local-law estimate of pi_{k,l}(x, w):
///   pi_k (log log w)^l / (l! log w) * h_k(l / log log w).
/// Requires w >= 16.
double predict_pi_k_ell(double pi_k_value, std::uint64_t x, std::uint64_t w, int k, int ell,
                        const EulerProductConfig& cfg);

/// Same quantity through the l-th Taylor coefficient of (log w)^{z-1} h_k(z):
///   pi_k / log w * sum_{a+b=l} h_k^{(a)}(0)/a! (log log w)^b / b!.
/// Requires w >= 16 and l <= 40.
double predict_pi_k_ell_taylor(double pi_k_value, std::uint64_t x, std::uint64_t w, int k,
                               int ell, const EulerProductConfig& cfg);

/// Taylor-route predictions for every l in [0, ell_max] from one set of
/// Taylor coefficients of h_k.
std::vector<double> local_law_taylor_profile(double pi_k_value, std::uint64_t x, std::uint64_t w,
                                             int k, int ell_max, const EulerProductConfig& cfg);

struct PredictionReport {
  std::string statistic_name;
  double empirical = 0.0;
  double main_term = 0.0;
  double correction = 0.0;
  double relative_deviation = 0.0;
};

PredictionReport make_report(std::string name, double empirical, double main_term,
                             double correction);

} // namespace ek
