// Apache License, Version 2.0, refer to LICENSE.txt

// Serial references against their OpenMP counterparts. Thread count comes
// from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "stochcond/estimators.hpp"
#include "stochcond/kernels.hpp"
#include "stochcond/models/commute.hpp"
#include "stochcond/models/nypopu.hpp"
#include "stochcond/models/sailing.hpp"

using namespace stochcond;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_LogCondBatch(benchmark::State& state) {
  const auto s = ny_population_summary(1);
  NyPopuModel m(s);
  const auto d = ny_observations(s);
  RandomSource rng(1);
  std::vector<std::vector<double>> ys;
  for (int i = 0; i < 100000; ++i) ys.push_back(d.draw(rng));
  const std::vector<double> x{std::log(s.mean), 2 * std::log(s.sd)};
  std::vector<double> out(ys.size());
  for (auto _ : state) {
    kernels::log_cond_batch(m, x, ys, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  label(state);
}
BENCHMARK(BM_LogCondBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EstimateLoglik(benchmark::State& state) {
  CommuteModel m(CommuteVariant::stochastic);
  RandomSource data(2);
  const auto d = commute_observations(CommuteVariant::stochastic, simulate_commute(30, 0.2, 0.8, 0.1, data));
  const std::vector<double> x{-1.0, 1.0, -2.0};
  EstimateOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_loglik(m, x, d, 20000, RandomSource(3), opt));
  label(state);
}
BENCHMARK(BM_EstimateLoglik)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ValueSweep(benchmark::State& state) {
  const int lake = 50;
  ValueTable current = value_iteration(lake, 1e-3);
  ValueTable next = current;
  for (auto _ : state) benchmark::DoNotOptimize(value_sweep(current, next, {}, exec_of(state)));
  label(state);
}
BENCHMARK(BM_ValueSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PolicyRollouts(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate_policy(SailingPolicy::parametric(3.7), 25, 2000, RandomSource(4), {}, exec_of(state)).mean);
  }
  label(state);
}
BENCHMARK(BM_PolicyRollouts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PredictiveTotals(benchmark::State& state) {
  std::vector<PosteriorSample> post;
  RandomSource rng(5);
  for (int i = 0; i < 10000; ++i) post.push_back({{20000 * (1 + 0.1 * rng.normal()), 2e10}, 1.0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(posterior_predictive_total(post, kNyTowns, 2000, RandomSource(6), exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_PredictiveTotals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
