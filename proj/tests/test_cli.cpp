#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "ek/cli.hpp"

using namespace ek;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ek");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Points EK_CACHE_DIR at a fresh temporary directory for the test's lifetime.
struct CacheDir {
  std::filesystem::path path;
  CacheDir() {
    path = std::filesystem::temp_directory_path() / "ek_cli_test_cache";
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
    setenv("EK_CACHE_DIR", path.c_str(), 1);
  }
  ~CacheDir() { std::filesystem::remove_all(path); }
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');)
      cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

} // namespace

TEST_CASE("argument parsing helpers") {
  CHECK(cli::parse_count("100000000") == 100'000'000);
  CHECK(cli::parse_count("10^8") == 100'000'000);
  CHECK(cli::parse_count("1e8") == 100'000'000);
  CHECK(cli::parse_count("2^22") == 4'194'304);
  CHECK_THROWS_AS(cli::parse_count("ten"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_count("10^30"), std::invalid_argument);
  CHECK(cli::parse_k_list("1-3") == std::vector<int>{1, 2, 3});
  CHECK(cli::parse_k_list("2,5-6") == std::vector<int>{2, 5, 6});
  CHECK_THROWS_AS(cli::parse_k_list("0-3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_k_list("4-2"), std::invalid_argument);

  const char* argv[] = {"ek", "locallaw", "--x", "10^6", "--w", "auto", "--k", "2,3", "--no-sieve"};
  const auto cfg = cli::parse_args(9, argv);
  CHECK(cfg.command == cli::Command::locallaw);
  CHECK(cfg.x == 1'000'000);
  CHECK_FALSE(cfg.w.has_value());
  CHECK_FALSE(cfg.allow_sieve);
  CHECK(cfg.k_list == std::vector<int>{2, 3});
}

TEST_CASE("counts at x = 10") {
  CacheDir cache;
  const auto r = run_cli({"counts", "--x", "10", "--w", "10"});
  REQUIRE(r.code == cli::exit_ok);
  const auto rows = parse_csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"k", "ell", "pi_k_ell", "pi_k"});
  bool found = false;
  for (const auto& row : rows)
    found |= row == std::vector<std::string>{"2", "1", "2", "2"};
  CHECK(found);
  CHECK(std::filesystem::exists(cache.path / "ek_x10_w10.ekh"));
}

TEST_CASE("exit codes") {
  CacheDir cache;
  CHECK(run_cli({"bogus"}).code == cli::exit_usage);
  CHECK(run_cli({"counts", "--x", "nope"}).code == cli::exit_usage);
  const auto bad_w = run_cli({"counts", "--x", "100", "--w", "200"});
  CHECK(bad_w.code == cli::exit_domain);
  CHECK(bad_w.err.find("w = 200") != std::string::npos);
  const auto missing = run_cli({"counts", "--x", "5000", "--w", "100", "--no-sieve"});
  CHECK(missing.code == cli::exit_io);
  CHECK(missing.err.find("--no-sieve") != std::string::npos);
  CHECK(run_cli({"predict", "--x", "50", "--w", "10"}).code == cli::exit_domain);
  CHECK(run_cli({"--help"}).code == cli::exit_ok);
}

TEST_CASE("sieve then reuse the cache") {
  CacheDir cache;
  const auto built = run_cli({"sieve", "--x", "200000", "--w", "1000"});
  REQUIRE(built.code == cli::exit_ok);
  const auto rows = parse_csv(built.out);
  CHECK(rows[1][2] == "199999");
  const auto reused = run_cli({"counts", "--x", "200000", "--w", "1000", "--no-sieve"});
  CHECK(reused.code == cli::exit_ok);
}

TEST_CASE("ekdist cdf column is monotone and ends at one") {
  CacheDir cache;
  const auto r = run_cli({"ekdist", "--x", "10^6", "--w", "1000", "--k", "3"});
  REQUIRE(r.code == cli::exit_ok);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() > 2);
  CHECK(rows[0][3] == "empirical_cdf");
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][3]);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(rows.back()[3] == "1");
}

TEST_CASE("locallaw with the asymptotic cutoff vanishes at k = 1, l = 0") {
  CacheDir cache;
  const auto r = run_cli({"locallaw", "--x", "10^6", "--w", "auto", "--k", "1", "--ell-max", "3"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.err.find("--w explicitly") != std::string::npos);
  const auto rows = parse_csv(r.out);
  CHECK(rows[1][1] == "0");
  CHECK(rows[1][3] == "0");
  CHECK(rows[1][4] == "0");
}

TEST_CASE("CSV is byte-identical across reruns and matches JSON") {
  CacheDir cache;
  for (const char* command : {"counts", "ekdist", "locallaw", "charfn", "predict"}) {
    CAPTURE(command);
    const std::vector<std::string> base = {command, "--x", "300000", "--w", "1000", "--k", "1-4",
                                           "--ell-max", "8", "--t-points", "9"};
    const auto a = run_cli(base);
    const auto b = run_cli(base);
    REQUIRE(a.code == cli::exit_ok);
    CHECK(a.out == b.out);

    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto j = run_cli(json_args);
    REQUIRE(j.code == cli::exit_ok);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["meta"]["x"] == 300000);
    const auto rows = parse_csv(a.out);
    REQUIRE(doc["rows"].size() + 1 == rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i)
      for (std::size_t c = 0; c < rows[0].size(); ++c) {
        const auto& cell = doc["rows"][i - 1][rows[0][c]];
        if (cell.is_boolean())
          CHECK(rows[i][c] == (cell.get<bool>() ? "true" : "false"));
        else
          CHECK(std::stod(rows[i][c]) == cell.get<double>());
      }
  }
}

TEST_CASE("output file") {
  CacheDir cache;
  const auto file = cache.path / "table.csv";
  const auto r = run_cli({"counts", "--x", "1000", "--w", "10", "--out", file.string()});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.empty());
  CHECK(std::filesystem::file_size(file) > 0);
  CHECK(run_cli({"counts", "--x", "1000", "--w", "10", "--out", "/nonexistent/dir/t.csv"}).code ==
        cli::exit_io);
}
