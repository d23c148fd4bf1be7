#include "ek/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ek/analytic.hpp"
#include "ek/census.hpp"
#include "ek/charfn.hpp"
#include "ek/errors.hpp"
#include "ek/omega_sieve.hpp"

namespace ek::cli {
namespace {

const std::map<std::string, Command> command_names = {
    {"sieve", Command::sieve},   {"counts", Command::counts},
    {"ekdist", Command::ekdist}, {"locallaw", Command::locallaw},
    {"charfn", Command::charfn}, {"predict", Command::predict},
};

std::string command_name(Command c) {
  for (const auto& [name, value] : command_names)
    if (value == c)
      return name;
  return "?";
}

Table make_table(const RunConfig& cfg, std::uint64_t w, std::vector<std::string> columns) {
  Table t;
  t.meta = {{"command", command_name(cfg.command)}, {"x", cfg.x}, {"w", w}};
  t.columns = std::move(columns);
  return t;
}

JointHistogram obtain_histogram(const RunConfig& cfg, std::uint64_t w, std::ostream& err,
                                std::filesystem::path& used_path) {
  used_path = cfg.cache_path.empty() ? default_cache_path(cfg.x, w) : cfg.cache_path;

  if (cfg.command != Command::sieve && std::filesystem::exists(used_path)) {
    JointHistogram h = load_histogram(used_path);
    if (h.x() != cfg.x || h.w() != w)
      throw IoError(fmt::format("{} holds x={}, w={} but x={}, w={} was requested",
                                used_path.string(), h.x(), h.w(), cfg.x, w));
    return h;
  }
  if (cfg.command != Command::sieve && !cfg.allow_sieve)
    throw IoError(fmt::format("no histogram cache at {} and sieving is disabled (--no-sieve)",
                              used_path.string()));

  SieveConfig sc;
  sc.x = cfg.x;
  sc.w = w;
  sc.segment_len = cfg.segment_len;
  sc.threads = cfg.threads;
  SegmentLogger log;
  if (cfg.verbose)
    log = [&err](std::uint64_t lo, std::uint64_t hi) {
      err << fmt::format("sieved [{}, {})\n", lo, hi);
    };
  JointHistogram h = build_histogram(sc, log);

  try {
    save_histogram(h, used_path);
  } catch (const IoError& e) {
    if (cfg.command == Command::sieve)
      throw;
    err << "warning: " << e.what() << " (continuing without cache)\n";
  }
  return h;
}

EulerProductConfig euler_config(const RunConfig& cfg) {
  return EulerProductConfig::with_cutoff(cfg.prime_cutoff);
}

Table counts_table(const RunConfig& cfg, const JointHistogram& h) {
  Table t = make_table(cfg, h.w(), {"k", "ell", "pi_k_ell", "pi_k"});
  for (const int k : cfg.k_list) {
    const auto poly = gen_polynomial(h, k);
    const int top = std::min<int>(cfg.ell_max, static_cast<int>(poly.degree()));
    for (int ell = 0; ell <= top; ++ell)
      t.rows.push_back({std::int64_t{k}, std::int64_t{ell}, pi_k_ell(h, k, ell), poly.mass()});
  }
  return t;
}

Table ekdist_table(const RunConfig& cfg, const JointHistogram& h, std::ostream& err) {
  Table t = make_table(cfg, h.w(),
                       {"k", "m", "y", "empirical_cdf", "phi", "deviation", "ks_distance",
                        "d_k"});
  t.meta.emplace_back("variable", std::string(cfg.truncated ? "truncated" : "full"));
  t.meta.emplace_back("centering", std::string(cfg.center_at_w ? "log2_w" : "log2_x"));
  t.meta.emplace_back("C", cfg.c);
  for (const int k : cfg.k_list) {
    if (pi_k(h, k) == 0) {
      err << fmt::format("warning: E_{}({}) is empty, skipped\n", k, h.x());
      continue;
    }
    const auto dist = ek_distribution(h, k, cfg.truncated ? Variable::truncated : Variable::full,
                                      cfg.center_at_w ? Centering::log2_w : Centering::log2_x);
    const std::uint64_t tail = d_k(h, k, cfg.c);
    const double center = iterated_log2(static_cast<double>(cfg.center_at_w ? h.w() : h.x()));
    for (const auto& pt : dist.cdf_points) {
      const auto m = static_cast<std::int64_t>(std::llround(pt.y * std::sqrt(center) + center));
      const double normal = phi(pt.y);
      t.rows.push_back({std::int64_t{k}, m, pt.y, pt.empirical_cdf, normal,
                        pt.empirical_cdf - normal, dist.ks_distance, tail});
    }
  }
  return t;
}

Table locallaw_table(const RunConfig& cfg, const JointHistogram& h) {
  if (h.w() < 16)
    throw DomainError("locallaw needs w >= 16");
  const auto ecfg = euler_config(cfg);
  const int ell_max = std::min(cfg.ell_max, 40);
  Table t = make_table(cfg, h.w(),
                       {"k", "ell", "empirical", "predicted", "predicted_taylor", "rel_dev",
                        "rel_dev_taylor"});
  for (const int k : cfg.k_list) {
    const auto pk = static_cast<double>(pi_k(h, k));
    const auto taylor = local_law_taylor_profile(pk, h.x(), h.w(), k, ell_max, ecfg);
    for (int ell = 0; ell <= ell_max; ++ell) {
      const auto emp = static_cast<double>(pi_k_ell(h, k, ell));
      const double pred = predict_pi_k_ell(pk, h.x(), h.w(), k, ell, ecfg);
      t.rows.push_back({std::int64_t{k}, std::int64_t{ell}, pi_k_ell(h, k, ell), pred,
                        taylor[ell], make_report("", emp, pred, 0.0).relative_deviation,
                        make_report("", emp, taylor[ell], 0.0).relative_deviation});
    }
  }
  return t;
}

Table charfn_table(const RunConfig& cfg, const JointHistogram& h, std::ostream& err) {
  if (h.w() < 16)
    throw DomainError("charfn needs w >= 16 so that T = log log w > 0");
  if (cfg.t_points < 2)
    throw ConfigError("--t-points must be at least 2");
  const auto ecfg = euler_config(cfg);
  const double T = iterated_log2(static_cast<double>(h.w()));
  const double root = std::sqrt(T);
  std::vector<double> ts(static_cast<std::size_t>(cfg.t_points));
  for (int j = 0; j < cfg.t_points; ++j)
    ts[j] = -root + 2.0 * root * j / (cfg.t_points - 1);

  Table t = make_table(cfg, h.w(),
                       {"k", "t", "exact_re", "exact_im", "predicted_re", "predicted_im",
                        "abs_error", "berry_esseen_normalized"});
  t.meta.emplace_back("T", T);
  t.meta.emplace_back("with_xi", cfg.with_xi);
  for (const int k : cfg.k_list) {
    const auto poly = gen_polynomial(h, k);
    if (poly.mass() == 0) {
      err << fmt::format("warning: E_{}({}) is empty, skipped\n", k, h.x());
      continue;
    }
    const double be = berry_esseen_integral(poly, T, poly.mass()) / static_cast<double>(poly.mass());
    for (const auto& s : charfn_samples(poly, T, ts, cfg.with_xi, ecfg))
      t.rows.push_back({std::int64_t{k}, s.t, s.exact.real(), s.exact.imag(), s.predicted.real(),
                        s.predicted.imag(), std::abs(s.exact - s.predicted), be});
  }
  return t;
}

Table predict_table(const RunConfig& cfg, const JointHistogram& h, std::ostream& err) {
  const auto ecfg = euler_config(cfg);
  Table t = make_table(cfg, h.w(),
                       {"k", "empirical", "main", "correction", "predicted", "rel_dev",
                        "rel_dev_main", "outside_band"});
  for (const int k : cfg.k_list) {
    const auto pred = predict_pi_k(h.x(), k, ecfg);
    if (pred.outside_validity_band)
      err << fmt::format("warning: k={} exceeds 3 log log x; expansion not expected to hold\n", k);
    const std::uint64_t emp = pi_k(h, k);
    const auto two_term = make_report("pi_k", static_cast<double>(emp), pred.main, pred.correction);
    const auto main_only = make_report("pi_k", static_cast<double>(emp), pred.main, 0.0);
    t.rows.push_back({std::int64_t{k}, emp, pred.main, pred.correction, pred.total(),
                      two_term.relative_deviation, main_only.relative_deviation,
                      pred.outside_validity_band});
  }
  return t;
}

} // namespace

std::uint64_t parse_count(const std::string& text) {
  const auto fail = [&] { return std::invalid_argument("not a non-negative integer: '" + text + "'"); };
  if (text.empty())
    throw fail();
  std::uint64_t value = 0;
  if (const auto caret = text.find('^'); caret != std::string::npos) {
    const auto base = parse_count(text.substr(0, caret));
    const auto exp = parse_count(text.substr(caret + 1));
    value = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (base != 0 && value > UINT64_MAX / base)
        throw fail();
      value *= base;
    }
    return value;
  }
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    const auto mantissa = parse_count(text.substr(0, e));
    const auto exp = parse_count(text.substr(e + 1));
    value = mantissa;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (value > UINT64_MAX / 10)
        throw fail();
      value *= 10;
    }
    return value;
  }
  for (const char c : text) {
    if (c == '_' || c == '\'')
      continue;
    if (c < '0' || c > '9' || value > (UINT64_MAX - 9) / 10)
      throw fail();
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const auto dash = item.find('-');
    const auto lo = static_cast<int>(parse_count(item.substr(0, dash)));
    const auto hi = dash == std::string::npos ? lo : static_cast<int>(parse_count(item.substr(dash + 1)));
    if (lo < 1 || hi > 63 || lo > hi)
      throw std::invalid_argument("k values must lie in [1, 63]: '" + item + "'");
    for (int k = lo; k <= hi; ++k)
      out.push_back(k);
    start = comma + 1;
  }
  if (out.empty())
    throw std::invalid_argument("empty k list");
  return out;
}

namespace {

struct RawArgs {
  std::string command, x = "10^8", w = "1000", k = "1-8", format = "csv", prime_cutoff = "10^5",
                       segment_len = "2^22", center = "x";
};

std::unique_ptr<CLI::App> make_app(RunConfig& cfg, RawArgs& raw) {
  auto app = std::make_unique<CLI::App>(
      "Distribution of omega(n - 1) over integers n with exactly k prime factors");
  std::vector<std::string> names;
  for (const auto& [name, _] : command_names)
    names.push_back(name);
  app->add_option("command", raw.command, "sieve | counts | ekdist | locallaw | charfn | predict")
      ->required()
      ->check(CLI::IsMember(names));
  app->add_option("--x", raw.x, "range upper bound (e.g. 10^8)")->capture_default_str();
  app->add_option("--w", raw.w, "smoothness cutoff, or 'auto' for exp(log x/(log log x)^2)")
      ->capture_default_str();
  app->add_option("--k", raw.k, "k values, e.g. 1-8 or 2,3")->capture_default_str();
  app->add_option("--ell-max", cfg.ell_max, "largest l in count and local-law tables")
      ->capture_default_str();
  app->add_option("--C", cfg.c, "constant of the D_k tail statistic")->capture_default_str();
  app->add_option("--format", raw.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app->add_option("--cache", cfg.cache_path, "histogram cache file");
  app->add_option("--prime-cutoff", raw.prime_cutoff, "Euler product cutoff")->capture_default_str();
  app->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--segment-len", raw.segment_len)->capture_default_str();
  app->add_option("--out", cfg.out_path, "output file (default stdout)");
  app->add_flag("--no-sieve", "fail instead of sieving when the cache is missing");
  app->add_flag("--truncated", cfg.truncated, "ekdist: use omega(n-1, w)");
  app->add_option("--center", raw.center, "ekdist: centre at log log x or log log w")
      ->check(CLI::IsMember({"x", "w"}))
      ->capture_default_str();
  app->add_option("--t-points", cfg.t_points, "charfn grid size")->capture_default_str();
  app->add_flag("--no-xi", "charfn: drop the xi correction from the prediction");
  app->add_flag("--verbose,-v", cfg.verbose, "log each sieved segment");
  return app;
}

void finish_config(RunConfig& cfg, const RawArgs& raw, const CLI::App& app) {
  try {
    cfg.command = command_names.at(raw.command);
    cfg.x = parse_count(raw.x);
    if (raw.w == "auto")
      cfg.w.reset();
    else
      cfg.w = parse_count(raw.w);
    cfg.k_list = parse_k_list(raw.k);
    cfg.prime_cutoff = parse_count(raw.prime_cutoff);
    cfg.segment_len = parse_count(raw.segment_len);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
  cfg.format = raw.format == "json" ? Format::json : Format::csv;
  cfg.center_at_w = raw.center == "w";
  cfg.allow_sieve = app.count("--no-sieve") == 0;
  cfg.with_xi = app.count("--no-xi") == 0;
}

} // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  RawArgs raw;
  auto app = make_app(cfg, raw);
  app->parse(argc, argv);
  finish_config(cfg, raw, *app);
  return cfg;
}

std::uint64_t resolve_w(const RunConfig& cfg, std::ostream& err) {
  std::uint64_t w = 0;
  if (cfg.w) {
    w = *cfg.w;
  } else {
    w = asymptotic_cutoff(cfg.x);
    err << fmt::format(
        "warning: the asymptotic cutoff gives w = {} at x = {}; it only becomes large for "
        "astronomically large x. Pass --w explicitly (e.g. 1000 or 100000) for meaningful "
        "local-law tables.\n",
        w, cfg.x);
  }
  if (w < 2 || w > cfg.x)
    throw ConfigError(fmt::format("w = {} does not lie in [2, x = {}]", w, cfg.x));
  return w;
}

std::filesystem::path default_cache_path(std::uint64_t x, std::uint64_t w) {
  const char* dir = std::getenv("EK_CACHE_DIR");
  const std::filesystem::path base = dir && *dir ? dir : ".";
  return base / fmt::format("ek_x{}_w{}.ekh", x, w);
}

Table build_table(const RunConfig& cfg, std::ostream& err) {
  const std::uint64_t w = resolve_w(cfg, err);
  std::filesystem::path cache;
  const JointHistogram h = obtain_histogram(cfg, w, err, cache);
  switch (cfg.command) {
  case Command::sieve: {
    Table t = make_table(cfg, w, {"x", "w", "total", "cache"});
    t.rows.push_back({h.x(), h.w(), h.total(), cache.string()});
    return t;
  }
  case Command::counts:
    return counts_table(cfg, h);
  case Command::ekdist:
    return ekdist_table(cfg, h, err);
  case Command::locallaw:
    return locallaw_table(cfg, h);
  case Command::charfn:
    return charfn_table(cfg, h, err);
  case Command::predict:
    return predict_table(cfg, h, err);
  }
  throw ConfigError("unknown command");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Table table = build_table(cfg, err);
    const std::string text = cfg.format == Format::json ? render_json(table) : render_csv(table);
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
      if (!(file << text))
        throw IoError("cannot write " + cfg.out_path.string());
    }
    return exit_ok;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  RawArgs raw;
  auto app = make_app(cfg, raw);
  try {
    app->parse(argc, argv);
    finish_config(cfg, raw, *app);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }
  return run(cfg, out, err);
}

} // namespace ek::cli
