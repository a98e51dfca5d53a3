#include <benchmark/benchmark.h>

#include "knotkit/ends.hpp"

using namespace knotkit::ends;

static void BM_CliqueChainComponents(benchmark::State& state) {
  auto family = make_clique_chain();
  RemovalDescriptor removal = RemovalDescriptor::family_specific("oddcliques", 3);
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(components_after_removal(*family, removal, cap, cap));
}
BENCHMARK(BM_CliqueChainComponents)->Arg(8)->Arg(16);

static void BM_BestKnownCounts(benchmark::State& state) {
  auto family = make_grid(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(best_known_counts(*family, 3));
}
BENCHMARK(BM_BestKnownCounts)->Arg(1)->Arg(2);
