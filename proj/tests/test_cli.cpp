#include <doctest.h>

#include <omp.h>

#include <sstream>

#include "sumsq/cli.hpp"

using namespace sumsq;
using namespace sumsq::cli;

namespace {

std::string report(const RunConfig& cfg, Format f) {
  std::ostringstream os;
  write_verify(os, verify_all(cfg, expand(cfg)), f, false);
  return os.str();
}

}  // namespace

TEST_CASE("config parsing") {
  RunConfig c = parse_config(R"({"tol": 1e-9, "max_terms": 1000, "format": "csv", "threads": 3,
    "suites": [{"identities": ["main", "popov"], "tol": 1e-10,
                "points": [{"k": [2, 3], "nu": 0.5, "alpha": [2, [2, 0.5]], "beta": [1]}]}]})");
  CHECK(c.tol == 1e-9);
  CHECK(c.max_terms == 1000);
  CHECK(c.format == Format::csv);
  CHECK(c.threads == 3);
  REQUIRE(c.suites.size() == 1);
  CHECK(c.suites[0].identities.size() == 2);
  CHECK(*c.suites[0].tol == 1e-10);
  const PointSpec& p = c.suites[0].points[0];
  CHECK(p.k == std::vector<int>{2, 3});
  CHECK(p.nu == std::vector<double>{0.5});
  CHECK(p.alpha[1] == Complex(2, 0.5));

  RunConfig s = parse_config(R"({"identities": ["hardy_gen"], "points": [{"beta": [1, 2]}]})");
  CHECK(s.suites.size() == 1);
  CHECK(s.threads == 0);
  CHECK(parse_config(default_config_text()).suites.size() > 10);
}

TEST_CASE("config errors") {
  for (const char* bad : {"not json", "[]", R"({"identities": []})", R"({"identities": ["nope"]})",
                          R"({"identities": ["main"], "points": [{"k": 2.5}]})",
                          R"({"identities": ["main"], "points": [{"kappa": 2}]})", R"({"tol": -1, "identities": ["main"]})",
                          R"({"threads": "many", "identities": ["main"]})", R"({"format": "xml", "identities": ["main"]})",
                          R"({"suites": []})", R"({"identities": ["main"], "points": [{"alpha": [[1, 2, 3]]}]})"})
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("grid expansion") {
  RunConfig c = parse_config(R"({"suites": [
    {"identities": ["main"], "points": [{"k": [2, 3], "nu": [0.5, 1], "alpha_beta": [[2, 1], [1, 2]]}]},
    {"identities": ["hardy_gen"], "points": [{"k": [2], "nu": [0.5, 1, 2], "alpha": [2, 3], "beta": [1]}]},
    {"identities": ["main"], "points": [{"alpha": [1], "beta": [2]}]}]})");
  std::vector<Task> t = expand(c);
  // 8 main points, hardy_gen collapses to one since nu and alpha are irrelevant, then one explicit
  REQUIRE(t.size() == 10);
  int rejected = 0;
  for (int i = 0; i < 8; ++i) rejected += t[i].rejected.has_value();
  CHECK(rejected == 4);
  CHECK_FALSE(t[0].explicit_point);
  CHECK(t[8].id == IdentityId::hardy_gen);
  CHECK_FALSE(t[8].explicit_point);  // several nu and alpha values, even if they collapse
  CHECK(t[9].explicit_point);
  REQUIRE(t[9].rejected);
  CHECK(t[9].rejected->code == "region");
  CHECK(t[0].point == ParamPoint{2, 0.5, 2.0, 1.0});
  CHECK(t[2].point == ParamPoint{2, 1.0, 2.0, 1.0});
}

TEST_CASE("verify driver exit codes") {
  RunConfig ok = parse_config(R"({"identities": ["hardy_gen"], "points": [{"beta": [1, 2]}]})");
  ok.output_path = "/dev/null";
  CHECK(run_verify(ok) == 0);
  RunConfig grid = parse_config(R"({"identities": ["main"], "points": [{"alpha_beta": [[2, 1], [1, 2]]}]})");
  grid.output_path = "/dev/null";
  CHECK(run_verify(grid) == 0);  // rejections inside a grid are reported, not fatal
  RunConfig only = parse_config(R"({"identities": ["main"], "points": [{"alpha": [1], "beta": [2]}]})");
  only.output_path = "/dev/null";
  CHECK(run_verify(only) == 2);
  RunConfig fail = parse_config(R"({"identities": ["main"], "max_terms": 3})");
  fail.output_path = "/dev/null";
  CHECK(run_verify(fail) == 1);
  RunConfig unwritable = ok;
  unwritable.output_path = "/nonexistent/dir/report.json";
  CHECK(run_verify(unwritable) == 2);
}

TEST_CASE("reports are independent of the thread count") {
  RunConfig c = parse_config(default_config_text());
  for (Format f : {Format::json, Format::csv}) {
    c.threads = 1;
    std::string one = report(c, f);
    c.threads = 8;
    std::string eight = report(c, f);
    CHECK(one == eight);
    c.threads = 3;
    CHECK(report(c, f) == one);
  }
  omp_set_num_threads(1);
}

TEST_CASE("report formats") {
  RunConfig c = parse_config(R"({"identities": ["main"], "points": [{"alpha_beta": [[2, 1], [1, 2]]}]})");
  std::string csv = report(c, Format::csv);
  CHECK(csv.rfind("identity,k,nu,alpha_re,alpha_im,beta_re,beta_im,rel_residual,lhs_terms,rhs_terms,seconds\n", 0) == 0);
  CHECK(csv.find("\nmain,2,0.5,2,0,1,0,") != std::string::npos);
  CHECK(csv.find("\nmain,2,0.5,1,0,2,0,nan,nan,nan,0\n") != std::string::npos);
  std::string json = report(c, Format::json);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(json.find("\"code\": \"region\"") != std::string::npos);
  CHECK(json.find("\"elapsed\": 0.0") != std::string::npos);
}

TEST_CASE("bench rows") {
  RunConfig c = parse_config(R"({"identities": ["main", "ramanujan_id"], "tol": 1e-6, "max_terms": 100000,
                                  "points": [{"alpha_beta": [[2, 1]]}]})");
  std::vector<BenchRow> rows = bench_all(c, expand(c));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].side == "exponential");
  CHECK(rows[2].side == "power_direct");
  CHECK(rows[2].terms > rows[2].terms_summed);
  CHECK(rows[3].side == "lhs");
  for (const BenchRow& r : rows) {
    CHECK(r.error.empty());
    CHECK(r.point.find(',') == std::string::npos);
  }
  std::ostringstream os;
  write_bench(os, rows, Format::csv);
  CHECK(os.str().rfind("identity,point,side,terms,seconds\nmain,k=2 nu=0.5 alpha=2 beta=1,exponential,", 0) == 0);
}

TEST_CASE("table and constants") {
  CHECK(run_table(2, 10, Format::csv, "/dev/null") == 0);
  CHECK(run_table(12, 10000, Format::csv, "/dev/null") == 2);
  std::ostringstream os;
  CHECK(run_constants(os) == 0);
  CHECK(os.str().find("\"zeta_prime_0\": -0.918938533204673") != std::string::npos);
  CHECK(os.str().find("\"beta_prime_0\": 0.391594392706837") != std::string::npos);
  CHECK(point_label({3, 0.5, Complex(2, -0.5), 1.0}) == "k=3 nu=0.5 alpha=2-0.5i beta=1");
}
