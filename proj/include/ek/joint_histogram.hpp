#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>

namespace ek {

/// Exact counts H[k][l][m] = #{2 <= n <= x : omega(n) = k,
/// omega(n - 1, w) = l, omega(n - 1) = m}.
///
/// Every empirical statistic (pi_k, pi_k(x, y), pi_{k,l}(x, w), D_k, the
/// generating polynomials f_k) is a marginal or partial sum of this table.
class JointHistogram {
public:
  static constexpr std::size_t dim = 64;
  static constexpr std::size_t cell_count = dim * dim * dim;

  JointHistogram(std::uint64_t x, std::uint64_t w);

  JointHistogram(const JointHistogram& other);
  JointHistogram& operator=(const JointHistogram& other);
  JointHistogram(JointHistogram&&) noexcept = default;
  JointHistogram& operator=(JointHistogram&&) noexcept = default;

  std::uint64_t x() const noexcept { return x_; }
  std::uint64_t w() const noexcept { return w_; }

  std::uint64_t at(std::size_t k, std::size_t l, std::size_t m) const noexcept {
    return (*counts_)[index(k, l, m)];
  }
  std::uint64_t& at(std::size_t k, std::size_t l, std::size_t m) noexcept {
    return (*counts_)[index(k, l, m)];
  }

  const std::array<std::uint64_t, cell_count>& cells() const noexcept { return *counts_; }
  std::array<std::uint64_t, cell_count>& cells() noexcept { return *counts_; }

  std::uint64_t total() const noexcept;

  /// Cell-wise addition; x and w must agree.
  JointHistogram& operator+=(const JointHistogram& other);

  friend bool operator==(const JointHistogram& a, const JointHistogram& b);

  static constexpr std::size_t index(std::size_t k, std::size_t l, std::size_t m) noexcept {
    return (k * dim + l) * dim + m;
  }

private:
  std::uint64_t x_;
  std::uint64_t w_;
  std::unique_ptr<std::array<std::uint64_t, cell_count>> counts_;
};

/// Binary cache (little-endian): "EKH1", u32 version, u64 x, u64 w,
/// u16 dims[3], u16 reserved, 64^3 u64 counts in [k][l][m] order, CRC-64/XZ
/// of all preceding bytes.
void save_histogram(const JointHistogram& h, const std::filesystem::path& path);

/// Throws FormatError, ChecksumError or TruncatedError on a bad file and
/// IoError when the file cannot be opened.
JointHistogram load_histogram(const std::filesystem::path& path);

} // namespace ek
