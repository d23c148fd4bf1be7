#include "ek/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ek/errors.hpp"
#include "ek/special_functions.hpp"

namespace ek {
namespace {

constexpr int dim = static_cast<int>(JointHistogram::dim);

void check_k(int k) {
  if (k < 1 || k >= dim)
    throw PreconditionError("k must lie in [1, 63], got " + std::to_string(k));
}

// marginal[v] = #{n in E_k : value = v} for the chosen variable
std::array<std::uint64_t, JointHistogram::dim> marginal(const JointHistogram& h, int k,
                                                        Variable variable) {
  std::array<std::uint64_t, JointHistogram::dim> out{};
  for (int l = 0; l < dim; ++l)
    for (int m = 0; m < dim; ++m)
      out[variable == Variable::truncated ? l : m] += h.at(k, l, m);
  return out;
}

double log2_of(const JointHistogram& h, Centering centering) {
  const auto base = centering == Centering::log2_x ? h.x() : h.w();
  const double v = iterated_log2(static_cast<double>(base));
  if (!(v > 0.0))
    throw DomainError("centering needs log log " +
                      std::string(centering == Centering::log2_x ? "x" : "w") + " > 0");
  return v;
}

} // namespace

std::uint64_t pi_k(const JointHistogram& h, int k) {
  check_k(k);
  std::uint64_t sum = 0;
  for (int l = 0; l < dim; ++l)
    for (int m = 0; m < dim; ++m)
      sum += h.at(k, l, m);
  return sum;
}

std::uint64_t pi_k_y(const JointHistogram& h, int k, double y) {
  check_k(k);
  const double center = log2_of(h, Centering::log2_x);
  const double bound = center + y * std::sqrt(center);
  const auto counts = marginal(h, k, Variable::full);
  std::uint64_t sum = 0;
  for (int m = 0; m < dim && static_cast<double>(m) <= bound; ++m)
    sum += counts[m];
  return sum;
}

std::uint64_t pi_k_ell(const JointHistogram& h, int k, int ell) {
  check_k(k);
  if (ell < 0 || ell >= dim)
    throw PreconditionError("ell must lie in [0, 63], got " + std::to_string(ell));
  std::uint64_t sum = 0;
  for (int m = 0; m < dim; ++m)
    sum += h.at(k, ell, m);
  return sum;
}

EkDistribution ek_distribution(const JointHistogram& h, int k, Variable variable,
                               Centering centering) {
  check_k(k);
  const auto counts = marginal(h, k, variable);
  EkDistribution out;
  out.k = k;
  out.x = h.x();
  for (const auto c : counts)
    out.pi_k += c;
  if (out.pi_k == 0)
    throw EmptyClassError("E_" + std::to_string(k) + "(" + std::to_string(h.x()) + ") is empty");

  const double center = log2_of(h, centering);
  const double scale = std::sqrt(center);
  const double total = static_cast<double>(out.pi_k);

  // The empirical CDF is a step function and Phi is increasing, so the
  // supremum is attained at a one-sided limit of some jump.
  std::uint64_t running = 0;
  for (int m = 0; m < dim; ++m) {
    if (counts[m] == 0)
      continue;
    const double y = (m - center) / scale;
    const double normal = phi(y);
    const double before = static_cast<double>(running) / total;
    running += counts[m];
    const double after = running == out.pi_k ? 1.0 : static_cast<double>(running) / total;
    out.ks_distance = std::max({out.ks_distance, std::abs(before - normal), std::abs(after - normal)});
    out.cdf_points.push_back({y, after});
  }
  return out;
}

std::uint64_t d_k(const JointHistogram& h, int k, double c) {
  check_k(k);
  const double threshold = c * iterated_log3(static_cast<double>(h.x()));
  std::uint64_t sum = 0;
  for (int l = 0; l < dim; ++l)
    for (int m = 0; m < dim; ++m)
      if (static_cast<double>(m - l) > threshold)
        sum += h.at(k, l, m);
  return sum;
}

Moments moments(const JointHistogram& h, int k, bool truncated) {
  check_k(k);
  const auto counts = marginal(h, k, truncated ? Variable::truncated : Variable::full);
  std::uint64_t n = 0, s1 = 0, s2 = 0; // exact up to x = 10^10
  for (int v = 0; v < dim; ++v) {
    n += counts[v];
    s1 += counts[v] * static_cast<std::uint64_t>(v);
    s2 += counts[v] * static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v);
  }
  if (n == 0)
    throw EmptyClassError("E_" + std::to_string(k) + " is empty");
  const double mean = static_cast<double>(s1) / static_cast<double>(n);
  // n s2 - s1^2 in 128-bit to keep the variance exact before the division
  const unsigned __int128 num =
      static_cast<unsigned __int128>(n) * s2 - static_cast<unsigned __int128>(s1) * s1;
  const double variance =
      static_cast<double>(num) / (static_cast<double>(n) * static_cast<double>(n));
  return {mean, variance};
}

} // namespace ek
