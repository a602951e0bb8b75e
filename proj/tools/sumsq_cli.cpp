#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sumsq/cli.hpp"

using namespace sumsq;
using namespace sumsq::cli;

namespace {

Complex parse_complex(const std::string& s) {
  std::size_t comma = s.find(',');
  std::size_t used = 0;
  double re = std::stod(s.substr(0, comma), &used);
  if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument(s);
  double im = 0;
  if (comma != std::string::npos) {
    std::string rest = s.substr(comma + 1);
    im = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
  }
  return {re, im};
}

struct Options {
  std::string config, identity, alpha, beta, out, format;
  std::optional<std::string> threads;
  std::optional<int> k;
  std::optional<double> nu, tol;
  std::optional<std::int64_t> max_terms;
  std::int64_t nmax = 10;
  bool timing = false;
};

void add_run_flags(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON run configuration");
  sub->add_option("--identity", o.identity, "catalog id, evaluated at one point");
  sub->add_option("--k", o.k, "dimension");
  sub->add_option("--nu", o.nu, "order");
  sub->add_option("--alpha", o.alpha, "re[,im]");
  sub->add_option("--beta", o.beta, "re[,im]");
  sub->add_option("--tol", o.tol, "relative tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-terms", o.max_terms, "term budget per series")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "output path (default: stdout)");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--threads", o.threads, "thread count or auto");
  sub->add_flag("--timing", o.timing, "report wall time per point");
}

RunConfig build_config(const Options& o) {
  RunConfig cfg;
  bool point_flags = o.k || o.nu || !o.alpha.empty() || !o.beta.empty();
  if (!o.identity.empty()) {
    if (!o.config.empty()) cfg = load_config(o.config);
    auto id = identity_from_name(o.identity);
    if (!id) throw ConfigError("unknown identity '" + o.identity + "'");
    PointSpec p;
    if (o.k) p.k = {*o.k};
    if (o.nu) p.nu = {*o.nu};
    try {
      if (!o.alpha.empty()) p.alpha = {parse_complex(o.alpha)};
      if (!o.beta.empty()) p.beta = {parse_complex(o.beta)};
    } catch (const std::exception&) {
      throw ConfigError("--alpha/--beta expect re[,im]");
    }
    cfg.suites = {Suite{{*id}, {p}, std::nullopt}};
  } else {
    if (point_flags) throw ConfigError("--k, --nu, --alpha, --beta need --identity");
    cfg = o.config.empty() ? parse_config(default_config_text()) : load_config(o.config);
  }
  if (o.tol) {
    cfg.tol = *o.tol;
    for (Suite& s : cfg.suites) s.tol.reset();
  }
  if (o.max_terms) cfg.max_terms = *o.max_terms;
  if (!o.out.empty()) cfg.output_path = o.out;
  if (!o.format.empty()) cfg.format = o.format == "csv" ? Format::csv : Format::json;
  if (o.threads == "auto") {
    cfg.threads = 0;
  } else if (o.threads) {
    try {
      std::size_t used = 0;
      int n = std::stoi(*o.threads, &used);
      if (used != o.threads->size() || n < 1) throw std::invalid_argument(*o.threads);
      cfg.threads = n;
    } catch (const std::exception&) {
      throw ConfigError("--threads expects a positive integer or auto");
    }
  }
  cfg.timing = o.timing;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of lattice-point Bessel series identities"};
  app.require_subcommand(1);
  Options o;
  auto* verify_cmd = app.add_subcommand("verify", "evaluate both sides of each identity and compare");
  add_run_flags(verify_cmd, o);
  auto* bench_cmd = app.add_subcommand("bench", "terms and time for the exponential vs power sides");
  add_run_flags(bench_cmd, o);
  auto* table_cmd = app.add_subcommand("table", "exact r_k(0..nmax)");
  int table_k = 2;
  table_cmd->add_option("--k", table_k, "dimension");
  table_cmd->add_option("--nmax", o.nmax, "last index");
  table_cmd->add_option("--out", o.out, "output path (default: stdout)");
  table_cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* const_cmd = app.add_subcommand("constants", "print the L-function constants as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table_cmd)
      return run_table(table_k, o.nmax, o.format == "json" ? Format::json : Format::csv, o.out);
    if (*const_cmd) return run_constants(std::cout);
    RunConfig cfg = build_config(o);
    return *bench_cmd ? run_bench(cfg) : run_verify(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
