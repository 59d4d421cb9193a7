#include <benchmark/benchmark.h>

#include <gridtrail/clockwise.hpp>
#include <gridtrail/oracle.hpp>
#include <gridtrail/trail.hpp>
#include <gridtrail/trees.hpp>

using namespace gridtrail;

static void BM_Generate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(k));
  state.counters["segments"] = static_cast<double>(h_lower(k));
}
BENCHMARK(BM_Generate)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_VerifyTrail(benchmark::State& state) {
  const Trail t = generate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trail(t));
}
BENCHMARK(BM_VerifyTrail)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_SearchNone3x3(benchmark::State& state) {
  SearchConfig c;
  c.budget = 3;
  c.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_trail_search(c));
}
BENCHMARK(BM_SearchNone3x3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Count3x3(benchmark::State& state) {
  SearchConfig c;
  c.budget = 4;
  for (auto _ : state) benchmark::DoNotOptimize(count_solutions(c, true));
}
BENCHMARK(BM_Count3x3)->Unit(benchmark::kMillisecond);

static void BM_VerifyTree(benchmark::State& state) {
  CoveringTree t = partial_tree_3();
  for (int i = 3; i < state.range(0); ++i) t = replicate_tree(t);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tree(t, ContactRule::arrangement));
  state.counters["segments"] = static_cast<double>(t.segments.size());
}
BENCHMARK(BM_VerifyTree)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
