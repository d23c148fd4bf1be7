#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ek/joint_histogram.hpp"
#include "ek/prime_basis.hpp"

namespace ek {

struct SieveConfig {
  static constexpr std::uint64_t max_x = 10'000'000'000ULL;
  static constexpr std::uint64_t min_segment_len = 1u << 10;

  std::uint64_t x = 100'000'000;
  std::uint64_t w = 1'000;
  std::uint64_t segment_len = 1u << 22;
  unsigned threads = 1;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

/// Smoothness cutoff w = exp(log x / (log log x)^2), rounded to the nearest
/// integer and clamped to [16, x].
std::uint64_t asymptotic_cutoff(std::uint64_t x);

struct SegmentOmegas {
  std::vector<std::uint8_t> full;      // omega(n)
  std::vector<std::uint8_t> truncated; // omega(n, w)
};

/// omega(n) and omega(n, w) for every n in [lo, hi).
///
/// Each basis prime p <= sqrt(hi - 1) is counted once on its multiples while
/// the p-part of n is accumulated; whatever cofactor remains is a single prime
/// above sqrt(hi - 1).
SegmentOmegas sieve_segment(std::uint64_t lo, std::uint64_t hi,
                            const PrimeBasis& basis, std::uint64_t w);

/// Called once per finished segment with (lo, hi).
using SegmentLogger = std::function<void(std::uint64_t, std::uint64_t)>;

JointHistogram build_histogram(const SieveConfig& cfg,
                               const SegmentLogger& log = {});

} // namespace ek
