#include "ek/omega_sieve.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "ek/errors.hpp"

namespace ek {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

// Scratch buffers reused across segments by one worker.
struct SieveBuffers {
  std::vector<std::uint64_t> smooth_part;
  std::vector<std::uint8_t> full;
  std::vector<std::uint8_t> truncated;
};

// Fills buffers for n in [lo, hi), lo >= 1. Requires every prime up to
// sqrt(hi - 1) in `basis`.
void sieve_into(std::uint64_t lo, std::uint64_t hi, const PrimeBasis& basis,
                std::uint64_t w, SieveBuffers& buf) {
  const std::size_t len = hi - lo;
  buf.smooth_part.assign(len, 1);
  buf.full.assign(len, 0);
  buf.truncated.assign(len, 0);

  auto* part = buf.smooth_part.data();
  auto* full = buf.full.data();
  auto* trunc = buf.truncated.data();
  const std::uint64_t top = hi - 1;
  const std::uint64_t root = isqrt(top);

  for (const std::uint64_t p : basis.primes()) {
    if (p > root)
      break;
    const std::uint8_t below_w = p <= w ? 1 : 0;
    for (std::uint64_t j = (p - lo % p) % p; j < len; j += p) {
      ++full[j];
      trunc[j] += below_w;
      part[j] *= p;
    }
    // higher powers of p only multiply the smooth part
    for (std::uint64_t pk = p * p;; pk *= p) {
      for (std::uint64_t j = (pk - lo % pk) % pk; j < len; j += pk)
        part[j] *= p;
      if (pk > top / p)
        break;
    }
  }

  for (std::size_t j = 0; j < len; ++j) {
    const std::uint64_t n = lo + j;
    if (part[j] != n) {
      // the cofactor is a single prime above sqrt(hi - 1)
      const std::uint64_t q = n / part[j];
      ++full[j];
      trunc[j] += q <= w ? 1 : 0;
    }
  }
}

} // namespace

void SieveConfig::validate() const {
  if (x < 2 || x > max_x)
    throw ConfigError("x must lie in [2, 10^10], got " + std::to_string(x));
  if (w < 2 || w > x)
    throw ConfigError("w must lie in [2, x], got " + std::to_string(w));
  if (segment_len < min_segment_len)
    throw ConfigError("segment_len must be at least 1024, got " +
                      std::to_string(segment_len));
  if (threads < 1)
    throw ConfigError("threads must be at least 1");
}

std::uint64_t asymptotic_cutoff(std::uint64_t x) {
  if (x < 16)
    throw DomainError("asymptotic cutoff needs log log x > 0, i.e. x >= 16");
  const double lx = std::log(static_cast<double>(x));
  const double llx = std::log(lx);
  const double w = std::round(std::exp(lx / (llx * llx)));
  if (!(w < static_cast<double>(x)))
    return x;
  return std::max<std::uint64_t>(16, static_cast<std::uint64_t>(w));
}

SegmentOmegas sieve_segment(std::uint64_t lo, std::uint64_t hi,
                            const PrimeBasis& basis, std::uint64_t w) {
  if (lo < 2 || hi <= lo)
    throw PreconditionError("sieve_segment needs 2 <= lo < hi");
  if (basis.limit() < isqrt(hi - 1))
    throw PreconditionError("prime basis limit " + std::to_string(basis.limit()) +
                            " is below sqrt(hi - 1) = " + std::to_string(isqrt(hi - 1)));
  SieveBuffers buf;
  sieve_into(lo, hi, basis, w, buf);
  return {std::move(buf.full), std::move(buf.truncated)};
}

JointHistogram build_histogram(const SieveConfig& cfg, const SegmentLogger& log) {
  cfg.validate();
  const PrimeBasis basis = PrimeBasis::build(std::max<std::uint64_t>(2, isqrt(cfg.x)));

  const std::uint64_t span = cfg.x - 1; // n in [2, x]
  const std::uint64_t segments = (span + cfg.segment_len - 1) / cfg.segment_len;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, segments));

  std::atomic<std::uint64_t> next{0};
  std::mutex log_mutex;

  auto work = [&](JointHistogram& local) {
    SieveBuffers buf;
    for (std::uint64_t s = next++; s < segments; s = next++) {
      const std::uint64_t lo = 2 + s * cfg.segment_len;
      const std::uint64_t hi = std::min(cfg.x + 1, lo + cfg.segment_len);
      // one extra leading element supplies omega(lo - 1)
      sieve_into(lo - 1, hi, basis, cfg.w, buf);
      for (std::size_t j = 1; j < hi - lo + 1; ++j)
        ++local.at(buf.full[j], buf.truncated[j - 1], buf.full[j - 1]);
      if (log) {
        std::lock_guard lock(log_mutex);
        log(lo, hi);
      }
    }
  };

  JointHistogram result(cfg.x, cfg.w);
  if (workers <= 1) {
    work(result);
    return result;
  }

  std::vector<JointHistogram> partials(workers, JointHistogram(cfg.x, cfg.w));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] { work(partials[t]); });
  }
  for (const auto& part : partials)
    result += part;
  return result;
}

} // namespace ek
