#include <benchmark/benchmark.h>

#include <cmath>

#include "antiramsey/experiments.hpp"
#include "antiramsey/random.hpp"

namespace {

using namespace antiramsey;

void BM_Gnp(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gnp(n, 0.05, 9, trial++));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gnp)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

// Census at threshold 15/7 on G(40, 40^-0.6), seed taken from the range.
void BM_CensusGnp40(benchmark::State& state) {
  const Graph g = gnp(40, std::pow(40.0, -0.6), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dense_subgraph_census(g, 12, Rational(15, 7)));
}
BENCHMARK(BM_CensusGnp40)->Arg(0)->Arg(10)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_FindWitnessJ(benchmark::State& state) {
  const Graph g = gnp(100, std::pow(100.0, -0.4), 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_witness_j(g));
}
BENCHMARK(BM_FindWitnessJ)->Unit(benchmark::kMicrosecond);

void BM_ScanSample(benchmark::State& state) {
  const double c = static_cast<double>(state.range(0)) / 100.0;
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(scan_sample(4, 100, std::pow(100.0, -c), 3, trial++));
}
BENCHMARK(BM_ScanSample)->Arg(35)->Arg(50)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
