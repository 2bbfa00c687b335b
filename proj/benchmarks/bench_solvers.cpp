// Scaling of the greedy construction against improving-move dynamics and the
// exhaustive solvers. Asymptotic claims are observed here, not asserted.

#include <benchmark/benchmark.h>

#include "srsg/srsg.hpp"

using namespace srsg;

namespace {

Instance make_instance(std::int64_t agents_per_color, std::int64_t resources,
                       std::uint64_t seed) {
  RandomParams params;
  params.n_resources = static_cast<std::int32_t>(resources);
  params.n_red = static_cast<std::int32_t>(agents_per_color);
  params.n_blue = static_cast<std::int32_t>(agents_per_color);
  params.edge_prob = 0.3;
  params.tau = Rational(3, 5);
  params.seed = seed;
  return random_instance(params);
}

void BM_GreedyEquilibrium(benchmark::State& state) {
  Instance g = make_instance(state.range(0), state.range(0) / 2 + 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(compute_ibe_greedy(g));
  state.SetComplexityN(state.range(0));
}

void BM_ImpactBlindDynamics(benchmark::State& state) {
  Instance g = make_instance(state.range(0), state.range(0) / 2 + 2, 7);
  for (auto _ : state) {
    StrategyProfile init = random_profile(g, 13);
    benchmark::DoNotOptimize(run_dynamics_summary(g, init, MoveMode::ImpactBlind,
                                                  Scheduler::round_robin(),
                                                  step_bound_pow5(g.agent_count())));
  }
  state.SetComplexityN(state.range(0));
}

void BM_ApproxIae2(benchmark::State& state) {
  Instance g = make_instance(state.range(0), state.range(0) / 2 + 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(approx_iae_2(g));
  state.SetComplexityN(state.range(0));
}

void BM_BruteForceOptimum(benchmark::State& state) {
  Instance g = make_instance(state.range(0), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(g));
}

}  // namespace

BENCHMARK(BM_GreedyEquilibrium)->RangeMultiplier(2)->Range(8, 512)->Complexity();
BENCHMARK(BM_ImpactBlindDynamics)->RangeMultiplier(2)->Range(8, 256)->Complexity();
BENCHMARK(BM_ApproxIae2)->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_BruteForceOptimum)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
