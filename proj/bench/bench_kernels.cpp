// Serial reference vs OpenMP kernels. Arg 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include <cmath>

#include "sumsq/arith.hpp"
#include "sumsq/cli.hpp"
#include "sumsq/identities.hpp"
#include "sumsq/quad.hpp"
#include "sumsq/specfun.hpp"

using namespace sumsq;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_rk_table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rk_table(8, 200'000, exec_of(state)));
}

void BM_convolve(benchmark::State& state) {
  SquaresTable a = rk_table(3, 20'000), b = rk_table(4, 20'000);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a.counts(), b.counts(), 20'000, exec_of(state)));
}

Truncation tight() {
  Truncation t;
  t.tol = 1e-13;
  return t;
}

// exponential side: the I K product series
void BM_exp_side(benchmark::State& state) {
  ParamPoint p{8, 1.7, 3.5, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_side(IdentityId::main, Side::lhs, p, tight(), exec_of(state)));
}

// power side through the smoothed lattice sum
void BM_power_side(benchmark::State& state) {
  ParamPoint p{8, 1.7, 3.5, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_side(IdentityId::main, Side::rhs, p, tight(), exec_of(state)));
}

void BM_bessel_panels(benchmark::State& state) {
  auto g = [](double u) { return bessel_j(0, u) * u / (u * u + 1); };
  for (auto _ : state) benchmark::DoNotOptimize(bessel_panels(g, 0, 1, 160, exec_of(state)));
}

// the whole default config; threads 1 vs all available
void BM_verify_default(benchmark::State& state) {
  cli::RunConfig cfg = cli::parse_config(cli::default_config_text());
  cfg.threads = state.range(0) ? 0 : 1;
  std::vector<cli::Task> tasks = cli::expand(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(cli::verify_all(cfg, tasks));
}

}  // namespace

BENCHMARK(BM_rk_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exp_side)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_power_side)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bessel_panels)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_default)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
