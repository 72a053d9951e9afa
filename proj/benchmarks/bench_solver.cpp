#include <benchmark/benchmark.h>

#include "arbor/enumerate.hpp"
#include "arbor/game.hpp"
#include "arbor/verifier.hpp"

using namespace arbor;

// Cold cache: every class value is computed from scratch.
static void BM_ClassValuesCold(benchmark::State& state) {
  auto trees = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GameSolver s;
    for (const Tree& t : trees) benchmark::DoNotOptimize(s.class_values(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_ClassValuesCold)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BundlePath(benchmark::State& state) {
  Tree t = path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GameSolver s;
    benchmark::DoNotOptimize(s.bundle(t));
  }
}
BENCHMARK(BM_BundlePath)->Arg(30)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_StoppingPath(benchmark::State& state) {
  Tree t = path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GameSolver s;
    benchmark::DoNotOptimize(s.stopping_time_distribution(t));
  }
}
BENCHMARK(BM_StoppingPath)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_SemirandomSweep(benchmark::State& state) {
  SweepOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_semirandom_bounds(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_SemirandomSweep)->Args({12, 1})->Args({14, 1})->Args({14, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
