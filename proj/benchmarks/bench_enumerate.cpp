#include <benchmark/benchmark.h>

#include "arbor/canonical.hpp"
#include "arbor/enumerate.hpp"
#include "arbor/limbs.hpp"

using namespace arbor;

static void BM_EnumerateLevels(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    FreeTreeGenerator gen(n);
    count = 0;
    while (gen.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["classes"] = static_cast<double>(count);
  state.counters["classes/s"] = benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateLevels)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FreeTreeGenerator gen(n);
    while (gen.next()) benchmark::DoNotOptimize(gen.tree());
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_CanonicalKey(benchmark::State& state) {
  auto trees = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Tree& t : trees) benchmark::DoNotOptimize(canonical_key(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_CanonicalKey)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_LimbProfile(benchmark::State& state) {
  auto trees = enumerate_trees(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Tree& t : trees) benchmark::DoNotOptimize(limb_profile(t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_LimbProfile)->Arg(14)->Unit(benchmark::kMillisecond);
