#pragma once

#include <cstdint>
#include <vector>

#include "ek/joint_histogram.hpp"

namespace ek {

/// Which count of n - 1 a distribution is taken over.
enum class Variable { full, truncated };

/// Centre and scale used to normalise omega(n - 1): log log x or log log w.
enum class Centering { log2_x, log2_w };

struct CdfPoint {
  double y = 0.0;
  double empirical_cdf = 0.0;
};

struct EkDistribution {
  int k = 0;
  std::uint64_t x = 0;
  std::uint64_t pi_k = 0;
  std::vector<CdfPoint> cdf_points; // one per count value carrying mass
  double ks_distance = 0.0;
};

std::uint64_t pi_k(const JointHistogram& h, int k);

/// #{n in E_k(x) : omega(n - 1) <= log log x + y sqrt(log log x)}.
/// Requires x > e so that log log x > 0.
std::uint64_t pi_k_y(const JointHistogram& h, int k, double y);

/// #{n in E_k(x) : omega(n - 1, w) = ell}.
std::uint64_t pi_k_ell(const JointHistogram& h, int k, int ell);

/// Empirical law of omega(n - 1) on E_k(x) with its Kolmogorov distance to
/// the standard normal. Throws EmptyClassError when pi_k = 0.
EkDistribution ek_distribution(const JointHistogram& h, int k,
                               Variable variable = Variable::full,
                               Centering centering = Centering::log2_x);

/// #{n in E_k(x) : omega(n - 1) - omega(n - 1, w) > C log log log x}.
/// Throws DomainError when log log log x is undefined (x < 3).
std::uint64_t d_k(const JointHistogram& h, int k, double c);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and (population) variance of omega(n - 1, w) when `truncated`,
/// otherwise of omega(n - 1), over E_k(x).
Moments moments(const JointHistogram& h, int k, bool truncated);

} // namespace ek
