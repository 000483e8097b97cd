#include <benchmark/benchmark.h>

#include "heckewalk/closedform.hpp"
#include "heckewalk/hecke.hpp"
#include "heckewalk/walk.hpp"

using namespace heckewalk;

static void BM_ExpandRho(benchmark::State& state) {
  const GenSequence r = rho(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HeckeElt h = expand(r);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_ExpandRho)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_AlphaTableRho(benchmark::State& state) {
  const GenSequence r = rho(static_cast<int>(state.range(0)));
  const TightClass cls = classify(r);
  for (auto _ : state) {
    auto table = alpha_table(r, cls);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_AlphaTableRho)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTight(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto all = enumerate_tight(l);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_EnumerateTight)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ExactDistribution(benchmark::State& state) {
  const GenSequence r = rho(static_cast<int>(state.range(0)));
  const Rational q(1, 2);
  for (auto _ : state) {
    Distribution d = exact_distribution(r, q);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_ExactDistribution)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
  const WalkConfig cfg{.q = Rational(1, 2), .samples = static_cast<std::uint64_t>(state.range(0)), .seed = 1};
  const GenSequence r = rho(4);
  for (auto _ : state) {
    Distribution d = simulate(r, cfg);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
