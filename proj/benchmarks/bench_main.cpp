#include <benchmark/benchmark.h>

#include "folb/conditions.hpp"
#include "folb/ef_game.hpp"
#include "folb/evaluator.hpp"
#include "folb/families.hpp"
#include "folb/hyperbolicity.hpp"
#include "folb/prelude.hpp"
#include "folb/recognizers.hpp"

using namespace folb;

static void BM_BuildMetric(benchmark::State& state) {
  const Graph g = families::hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MetricOracle(g));
}
BENCHMARK(BM_BuildMetric)->DenseRange(3, 7);

static void BM_WeaklyModularDirect(benchmark::State& state) {
  const MetricOracle m(families::hypercube(static_cast<int>(state.range(0))));
  const ClassSpec& spec = class_spec("weakly_modular");
  for (auto _ : state) benchmark::DoNotOptimize(recognize(spec, m));
}
BENCHMARK(BM_WeaklyModularDirect)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_WeaklyModularSentence(benchmark::State& state) {
  const MetricOracle m(families::hypercube(static_cast<int>(state.range(0))));
  const ClassSpec& spec = class_spec("weakly_modular");
  for (auto _ : state) benchmark::DoNotOptimize(recognize_by_sentence(spec, m));
}
BENCHMARK(BM_WeaklyModularSentence)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DeltaStar(benchmark::State& state) {
  const MetricOracle m(families::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(delta_star(m));
}
BENCHMARK(BM_DeltaStar)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_EvaluateBipartite(benchmark::State& state) {
  const MetricOracle m(families::cycle(static_cast<int>(state.range(0))));
  const Formula f = sentence(Prelude::standard(), "bipartite");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, m));
}
BENCHMARK(BM_EvaluateBipartite)->RangeMultiplier(2)->Range(8, 64);

static void BM_EfGame(benchmark::State& state) {
  const auto a = betweenness_structure(families::euler_a(1));
  const auto b = betweenness_structure(families::euler_b(1));
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(play(a, b, rounds));
}
BENCHMARK(BM_EfGame)->DenseRange(1, 3);

BENCHMARK_MAIN();
