#include <benchmark/benchmark.h>

#include "vucb/oracle.hpp"
#include "vucb/policies.hpp"
#include "vucb/theory.hpp"

using namespace vucb;

static void BM_EpisodeVucb(benchmark::State& state) {
  Instance inst{{GroupDistribution::gaussian(0, 1), GroupDistribution::gaussian(0, 2),
                 GroupDistribution::gaussian(0, 3)}};
  const std::int64_t T = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), T, seed++));
  }
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(BM_EpisodeVucb)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_FixedPoint(benchmark::State& state) {
  const std::vector<double> sigma{1, 2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate_fixed_point(
        sigma, AdmissibleWidth::gaussian(1e6), NormParam::infinite(), 1e6));
  }
}
BENCHMARK(BM_FixedPoint);

static void BM_BruteForce(benchmark::State& state) {
  const std::vector<double> sigma{0.5, 1.5, 2.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_optimal(sigma, NormParam::finite(2), 30.0, 1e-3));
  }
}
BENCHMARK(BM_BruteForce);

BENCHMARK_MAIN();
