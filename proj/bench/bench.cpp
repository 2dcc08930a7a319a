#include <benchmark/benchmark.h>

#include <vector>

#include "takeaway/engine.hpp"
#include "takeaway/families.hpp"
#include "takeaway/scan.hpp"

namespace {

using namespace takeaway;

void BM_GrundySerial(benchmark::State& state) {
  const Graph g = generate(family::Wheel{static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) {
    GrundyTable table;
    benchmark::DoNotOptimize(grundy(g, table));
  }
}

void BM_GrundyParallel(benchmark::State& state) {
  const Graph g = generate(family::Wheel{static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) {
    GrundyTable table;
    benchmark::DoNotOptimize(grundy_parallel(g, table));
  }
}

std::vector<Graph> batch() {
  std::vector<Graph> graphs;
  for (std::uint32_t n = 3; n <= 8; ++n) {
    graphs.push_back(generate(family::Fan{n}));
    graphs.push_back(generate(family::Complete{n > 6 ? 6 : n}));
  }
  return graphs;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto graphs = batch();
  for (auto _ : state) {
    GrundyTable table;
    for (const auto& g : graphs) benchmark::DoNotOptimize(grundy(g, table));
  }
}

void BM_BatchParallel(benchmark::State& state) {
  const auto graphs = batch();
  for (auto _ : state) {
    GrundyTable table;
    benchmark::DoNotOptimize(grundy_batch(graphs, table));
  }
}

void BM_SubgraphsReference(benchmark::State& state) {
  const Graph g = generate(family::Wheel{static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_classes_reference(g).size());
}

void BM_SubgraphsParallel(benchmark::State& state) {
  const Graph g = generate(family::Wheel{static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_classes(g).size());
}

}  // namespace

BENCHMARK(BM_GrundySerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrundyParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgraphsReference)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgraphsParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
