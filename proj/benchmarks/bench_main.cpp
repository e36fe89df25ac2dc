#include <benchmark/benchmark.h>

#include <cmath>
#include <map>

#include "bcapprox/bounds.hpp"
#include "bcapprox/estimator.hpp"
#include "bcapprox/exact.hpp"
#include "bcapprox/generators.hpp"
#include "bcapprox/sampling.hpp"

namespace {

using namespace bcapprox;

const Graph& ba_graph(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen::barabasi_albert(n, 3, 1)).first;
  return it->second;
}

// Samples per second, including bidirectional search, path draws and the
// estimator update with 25 sign columns.
void BM_Sampling(benchmark::State& state) {
  const Graph& g = ba_graph(static_cast<std::size_t>(state.range(0)));
  SampleDriver driver(g, std::log(10.0), kDefaultBagCap, 1, 1);
  EstimatorState est(g.num_nodes(), 25);
  std::uint64_t next = 0;
  constexpr std::uint64_t kBatch = 1000;
  for (auto _ : state) {
    driver.fill(est, Stream::kProgressive, next, kBatch);
    next += kBatch;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(next));
}
BENCHMARK(BM_Sampling)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BrandesExact(benchmark::State& state) {
  const Graph& g = ba_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brandes_exact(g));
}
BENCHMARK(BM_BrandesExact)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_SufficientSamples(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds::sufficient_samples(eps, 0.05, 0.1, 4.0));
  }
}
BENCHMARK(BM_SufficientSamples)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_PartitionAndMcera(benchmark::State& state) {
  const Graph& g = ba_graph(10000);
  SampleDriver driver(g, std::log(10.0), kDefaultBagCap, 2, 1);
  EstimatorState est(g.num_nodes(), 25);
  driver.fill(est, Stream::kProgressive, 0, 20000);
  const Partition p = build_partition(est, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(mcera(est, p));
}
BENCHMARK(BM_PartitionAndMcera)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
