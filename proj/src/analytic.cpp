#include "ek/analytic.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ek/errors.hpp"

namespace ek {
namespace {

double r_parameter(std::uint64_t x, int k) {
  if (x < 16)
    throw DomainError("r = (k - 1) / log log x needs x >= 16");
  if (k < 1)
    throw PreconditionError("k must be at least 1");
  const double r = (k - 1) / iterated_log2(static_cast<double>(x));
  if (r > max_r)
    throw DomainError("r = (k - 1) / log log x = " + std::to_string(r) + " exceeds 30");
  return r;
}

void require_local_law_domain(std::uint64_t w, int ell) {
  if (w < 16)
    throw DomainError("local law needs w >= 16 so that log log w > 0");
  if (ell < 0)
    throw PreconditionError("ell must be non-negative");
}

// (log log w)^l / l!
double poisson_weight(double llw, int ell) {
  double v = 1.0;
  for (int i = 1; i <= ell; ++i)
    v *= llw / i;
  return v;
}

} // namespace

Complex h_k(double r, Complex z, const EulerProductConfig& cfg) {
  if (!(r >= 0.0 && r <= max_r))
    throw PreconditionError("h_k needs 0 <= r <= 30, got " + std::to_string(r));
  const Complex s = z - 1.0;
  const Complex product = euler_product(
      [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        const Complex u = s / (pd + r - 1.0);
        if (u == -1.0)
          return LocalFactor::zero();
        return LocalFactor{ek::log1p(u) + s * std::log1p(-1.0 / pd)};
      },
      cfg);
  if (product == 0.0)
    return 0.0;
  return std::exp(euler_gamma * s) * product;
}

Complex lambda_unit(Complex z, const EulerProductConfig& cfg) {
  const Complex rg = reciprocal_gamma(z + 1.0);
  if (rg == 0.0)
    return 0.0;
  return rg * euler_product(
                  [&](std::uint64_t p) {
                    const double pd = static_cast<double>(p);
                    const Complex u = z / (pd - 1.0);
                    if (u == -1.0)
                      return LocalFactor::zero();
                    return LocalFactor{ek::log1p(u) + z * std::log1p(-1.0 / pd)};
                  },
                  cfg);
}

Complex lambda_w(Complex z, Complex r, std::uint64_t w, const EulerProductConfig& cfg,
                 bool gamma_normalized) {
  const Complex rg = gamma_normalized ? reciprocal_gamma(r + 1.0) : Complex(1.0);
  if (rg == 0.0)
    return 0.0;
  return rg * euler_product(
                  [&](std::uint64_t p) {
                    const double pd = static_cast<double>(p);
                    const Complex denom = p <= w ? pd + z - 2.0 : Complex(pd - 1.0);
                    if (denom == 0.0)
                      throw PoleError("lambda_w: factor pole at p = " + std::to_string(p));
                    const Complex u = r / denom;
                    if (u == -1.0)
                      return LocalFactor::zero();
                    return LocalFactor{ek::log1p(u) + r * std::log1p(-1.0 / pd)};
                  },
                  cfg);
}

double mertens_log_sum(std::uint64_t w, const PrimeBasis& basis) {
  double sum = 0.0;
  for (const std::uint64_t p : basis.primes()) {
    if (p > w)
      break;
    sum += std::log1p(-1.0 / static_cast<double>(p));
  }
  if (w > basis.limit())
    sum -= std::log(std::log(static_cast<double>(w))) -
           std::log(std::log(static_cast<double>(basis.limit())));
  return sum;
}

XiEvaluator::XiEvaluator(std::uint64_t x, std::uint64_t w, int k, EulerProductConfig cfg)
    : w_(w), cfg_(std::move(cfg)), r_(r_parameter(x, k)) {
  cfg_.validate();
  if (w < 2)
    throw DomainError("xi needs w >= 2");
  log_log_w_ = std::log(std::log(static_cast<double>(w)));
  mertens_sum_ = mertens_log_sum(w, *cfg_.basis);
  const auto lambda = [this](Complex s) { return lambda_unit(s, cfg_); };
  lambda1_ = lambda(r_);
  if (lambda1_ == 0.0)
    throw DomainError("lambda_unit(r) vanishes; xi undefined");
  lambda1_dd_ = cauchy_derivative(lambda, r_, 2, derivative_radius);

  nodes_ = cauchy_nodes(r_, derivative_radius);
  tail_at_nodes_.reserve(nodes_.size());
  for (const Complex s : nodes_) {
    // full product over all p (with its tail estimate) divided by the p <= w part
    const Complex full = euler_product(
        [&](std::uint64_t p) {
          const double pd = static_cast<double>(p);
          return LocalFactor{ek::log1p(s / (pd - 1.0)) + s * std::log1p(-1.0 / pd)};
        },
        cfg_);
    const Complex rg = reciprocal_gamma(s + 1.0);
    const Complex small = head(1.0, s);
    tail_at_nodes_.push_back(rg == 0.0 || small == 0.0 ? Complex(0.0) : rg * full / small);
  }
}

Complex XiEvaluator::head(Complex z, Complex r) const {
  const Complex shift = (z - 1.0) + r;
  Complex log_sum = 0.0;
  for (const std::uint64_t p : cfg_.basis->primes()) {
    if (p > w_ || p > cfg_.prime_cutoff)
      break;
    const double pd = static_cast<double>(p);
    const Complex u = shift / (pd - 1.0);
    if (u == -1.0)
      return 0.0;
    log_sum += ek::log1p(u) + shift * std::log1p(-1.0 / pd);
  }
  return std::exp(log_sum);
}

Complex XiEvaluator::operator()(Complex z) const {
  // (log w)^{1-z} prod_{p<=w} (1 - 1/p)^{1-z}
  const Complex mertens = std::exp((1.0 - z) * (log_log_w_ + mertens_sum_));
  std::vector<Complex> regular(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    regular[j] = tail_at_nodes_[j] == 0.0 ? Complex(0.0) : tail_at_nodes_[j] * head(z, nodes_[j]);
  const Complex regular_dd = derivative_from_samples(regular, 2, derivative_radius);
  return (h_k(r_, z, cfg_) * lambda1_dd_ - mertens * regular_dd) / (2.0 * lambda1_);
}

Complex xi(Complex z, std::uint64_t x, std::uint64_t w, int k, const EulerProductConfig& cfg) {
  return XiEvaluator(x, w, k, cfg)(z);
}

Complex mertens_check(std::uint64_t w, Complex z, const EulerProductConfig& cfg) {
  cfg.validate();
  if (w < 16 || w > cfg.basis->limit())
    throw PreconditionError("mertens_check needs 16 <= w <= basis limit");
  const double log_sum = mertens_log_sum(w, *cfg.basis);
  return std::exp((z - 1.0) *
                  (euler_gamma + std::log(std::log(static_cast<double>(w))) + log_sum));
}

PiKPrediction predict_pi_k(std::uint64_t x, int k, const EulerProductConfig& cfg) {
  if (x < 100)
    throw DomainError("predict_pi_k needs x >= 100");
  const double r = r_parameter(x, k);
  const double lx = std::log(static_cast<double>(x));
  const double llx = std::log(lx);

  double prefactor = static_cast<double>(x) / lx;
  for (int i = 1; i < k; ++i)
    prefactor *= llx / i;

  const auto lambda = [&](Complex s) { return lambda_unit(s, cfg); };
  PiKPrediction out;
  out.main = prefactor * lambda(r).real();
  if (k > 1) {
    const double dd = cauchy_derivative(lambda, r, 2, derivative_radius).real();
    out.correction = -prefactor * r * dd / (2.0 * llx);
  }
  out.outside_validity_band = k > 3.0 * llx;
  return out;
}

double predict_pi_k_ell(double pi_k_value, std::uint64_t x, std::uint64_t w, int k, int ell,
                        const EulerProductConfig& cfg) {
  require_local_law_domain(w, ell);
  const double r = r_parameter(x, k);
  const double lw = std::log(static_cast<double>(w));
  const double llw = std::log(lw);
  const double h = h_k(r, ell / llw, cfg).real();
  return pi_k_value * poisson_weight(llw, ell) / lw * h;
}

std::vector<double> local_law_taylor_profile(double pi_k_value, std::uint64_t x, std::uint64_t w,
                                             int k, int ell_max, const EulerProductConfig& cfg) {
  require_local_law_domain(w, ell_max);
  if (ell_max > 40)
    throw PreconditionError("Taylor local law supports ell <= 40");
  const double r = r_parameter(x, k);
  const double lw = std::log(static_cast<double>(w));
  const double llw = std::log(lw);
  const auto coeffs =
      taylor_coefficients([&](Complex z) { return h_k(r, z, cfg); }, 0.0, ell_max + 1, 1.0);
  std::vector<double> out(static_cast<std::size_t>(ell_max) + 1);
  for (int ell = 0; ell <= ell_max; ++ell) {
    double sum = 0.0;
    for (int a = 0; a <= ell; ++a)
      sum += coeffs[a].real() * poisson_weight(llw, ell - a);
    out[ell] = pi_k_value * sum / lw;
  }
  return out;
}

double predict_pi_k_ell_taylor(double pi_k_value, std::uint64_t x, std::uint64_t w, int k,
                               int ell, const EulerProductConfig& cfg) {
  return local_law_taylor_profile(pi_k_value, x, w, k, ell, cfg).back();
}

PredictionReport make_report(std::string name, double empirical, double main_term,
                             double correction) {
  const double predicted = main_term + correction;
  return {std::move(name), empirical, main_term, correction,
          std::abs(empirical - predicted) / std::max(std::abs(empirical), 1.0)};
}

} // namespace ek
