// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "surftutte/corpus.hpp"
#include "surftutte/kernels.hpp"
#include "surftutte/links.hpp"
#include "surftutte/surface_tutte.hpp"

using namespace surftutte;

namespace {

CombinatorialMap map_with(int edges) {
  Rng rng(static_cast<std::uint64_t>(edges) * 7919);
  return random_map(rng, edges);
}

auto exponent_key = [](std::uint64_t, const SubgraphInvariants& r) { return StateKey{r.c, r.k, r.s, r.s_perp}; };

void BM_SubgraphsSerial(benchmark::State& state) {
  InvariantContext ctx(EmbeddedSubgraph::whole(map_with(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(accumulate_serial(ctx, exponent_key));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * subgraph_count(ctx)));
}

void BM_SubgraphsParallel(benchmark::State& state) {
  InvariantContext ctx(EmbeddedSubgraph::whole(map_with(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(accumulate_parallel(ctx, exponent_key));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * subgraph_count(ctx)));
}

void BM_BracketSerial(benchmark::State& state) {
  Rng rng(17);
  const auto d = random_alternating_diagram(rng, 1, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman(d, {kDefaultCrossingCap, false}));
}

void BM_BracketParallel(benchmark::State& state) {
  Rng rng(17);
  const auto d = random_alternating_diagram(rng, 1, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman(d, {kDefaultCrossingCap, true}));
}

}  // namespace

BENCHMARK(BM_SubgraphsSerial)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgraphsParallel)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
