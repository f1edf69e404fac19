#include <benchmark/benchmark.h>

#include "pdifmp/brownian.hpp"
#include "pdifmp/conditional.hpp"
#include "pdifmp/exact_fpt.hpp"
#include "pdifmp/hybrid.hpp"
#include "pdifmp/reference_em.hpp"

using namespace pdifmp;

static void BM_InverseGaussian(benchmark::State& state) {
  Rng rng = make_stream(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_inverse_gaussian(2.0, 4.0, rng));
}
BENCHMARK(BM_InverseGaussian);

static void BM_ContinuousFpt(benchmark::State& state) {
  const PDifMPModel m = catalog_example1();
  const GirsanovBounds b = bounds(m, 3.0);
  Rng rng = make_stream(2, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_fpt_continuous(m, b, 0.0, -1.0, m.initial.z, rng));
}
BENCHMARK(BM_ContinuousFpt);

static void BM_ValueAtJump(benchmark::State& state) {
  const PDifMPModel m = catalog_example1();
  const GirsanovBounds b = bounds(m, 3.0);
  ConditionalConfig cfg;
  cfg.s_min = static_cast<double>(state.range(0));
  Rng rng = make_stream(3, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_value_at_jump(m, b, 0.0, 0.7, -1.0, m.initial.z, cfg, rng));
}
BENCHMARK(BM_ValueAtJump)->Arg(-2)->Arg(-10);

template <PDifMPModel (*Make)(const CatalogParams&)>
static void BM_HybridSample(benchmark::State& state) {
  const PDifMPModel m = Make({});
  const GirsanovBounds b = bounds(m, 3.0);
  Rng rng = make_stream(4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fpt(m, 3.0, {}, b, rng));
}
BENCHMARK(BM_HybridSample<catalog_example1>);
BENCHMARK(BM_HybridSample<catalog_example2>);

static void BM_EulerMaruyamaSample(benchmark::State& state) {
  const PDifMPModel m = catalog_example1();
  Rng rng = make_stream(5, 0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_em_fpt(m, 3.0, kDefaultEmStep, rng));
}
BENCHMARK(BM_EulerMaruyamaSample);
BENCHMARK_MAIN();
