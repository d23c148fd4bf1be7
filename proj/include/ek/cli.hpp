#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ek/table.hpp"

namespace ek::cli {

enum class Command { sieve, counts, ekdist, locallaw, charfn, predict };
enum class Format { csv, json };

/// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_io = 2;
inline constexpr int exit_usage = 3;

struct RunConfig {
  Command command = Command::counts;
  std::uint64_t x = 100'000'000;
  std::optional<std::uint64_t> w;    // nullopt: asymptotic formula
  std::vector<int> k_list = {1, 2, 3, 4, 5, 6, 7, 8};
  int ell_max = 30;
  double c = 10.0;
  Format format = Format::csv;
  std::filesystem::path cache_path;  // empty: derived from EK_CACHE_DIR, x, w
  std::uint64_t prime_cutoff = 100'000;
  unsigned threads = 1;
  std::uint64_t segment_len = 1u << 22;
  std::filesystem::path out_path;    // empty: stdout
  bool allow_sieve = true;
  bool truncated = false;            // ekdist: omega(n - 1, w) instead of omega(n - 1)
  bool center_at_w = false;          // ekdist: centre at log log w
  int t_points = 41;                 // charfn grid size over [-sqrt T, sqrt T]
  bool with_xi = true;
  bool verbose = false;
};

/// Parses "100000000", "10^8" or "1e8".
std::uint64_t parse_count(const std::string& text);

/// Parses "1-8", "2,3" or "1,3-5".
std::vector<int> parse_k_list(const std::string& text);

/// Parses argv into a RunConfig; throws CLI::ParseError (and CLI::Success for
/// --help) on bad input.
RunConfig parse_args(int argc, const char* const* argv);

/// Resolves w (explicit or asymptotic) and validates it against x.
std::uint64_t resolve_w(const RunConfig& cfg, std::ostream& err);

std::filesystem::path default_cache_path(std::uint64_t x, std::uint64_t w);

/// Computes the table of a command without writing it.
Table build_table(const RunConfig& cfg, std::ostream& err);

/// Full command: compute, render and write. Returns an exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv entry point: parse then run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ek::cli
