#pragma once
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sumsq/identities.hpp"

namespace sumsq::cli {

enum class Format { json, csv };

// One grid entry of a config: lists per parameter, expanded as a cross
// product. alpha_beta, when present, replaces the alpha x beta product.
struct PointSpec {
  std::vector<int> k{2};
  std::vector<double> nu{0.5};
  std::vector<Complex> alpha{Complex(2.0)};
  std::vector<Complex> beta{Complex(1.0)};
  std::vector<std::pair<Complex, Complex>> alpha_beta;
};

struct Suite {
  std::vector<IdentityId> identities;
  std::vector<PointSpec> points;
  std::optional<double> tol;
};

struct RunConfig {
  std::vector<Suite> suites;
  double tol = 1e-8;
  std::int64_t max_terms = 4'000'000;
  std::string output_path;  // empty: standard output
  Format format = Format::json;
  int threads = 0;          // 0: auto
  bool timing = false;      // report wall time; off keeps reports reproducible
};

// Parses a JSON document; throws ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
const std::string& default_config_text();

struct Task {
  IdentityId id;
  ParamPoint point;
  double tol;
  bool explicit_point;                  // came from a single-valued spec
  std::optional<RejectedError> rejected;
};

// Cross-product expansion with per-identity normalisation, duplicate removal
// and region checks, in declaration order.
std::vector<Task> expand(const RunConfig& cfg);

enum class Status { pass, fail, error, rejected };

struct Outcome {
  Task task;
  Status status = Status::error;
  IdentityReport report;
  std::string error_side, error_message;
};

std::vector<Outcome> verify_all(const RunConfig& cfg, const std::vector<Task>& tasks);

void write_verify(std::ostream& os, const std::vector<Outcome>& out, Format f, bool timing);

struct BenchRow {
  std::string identity, point, side;
  std::int64_t terms = 0, terms_summed = 0;
  double tail_estimate = 0, seconds = 0;
  Complex value;
  std::string error;
};

std::vector<BenchRow> bench_all(const RunConfig& cfg, const std::vector<Task>& tasks);
void write_bench(std::ostream& os, const std::vector<BenchRow>& rows, Format f);

std::string point_label(const ParamPoint& p);

// Subcommand drivers. Return the process exit code: 0 pass, 1 failure,
// 2 usage or configuration error.
int run_verify(const RunConfig& cfg);
int run_bench(const RunConfig& cfg);
int run_table(int k, std::int64_t nmax, Format f, const std::string& out_path);
int run_constants(std::ostream& os);

}  // namespace sumsq::cli
