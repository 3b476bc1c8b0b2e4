#include <benchmark/benchmark.h>

#include "cgg/constructions.hpp"
#include "cgg/disjointness.hpp"
#include "cgg/search.hpp"

namespace {

void BM_MaxDisjointDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cgg::Cgg g = cgg::complete_graph(n);
  for (auto _ : state) benchmark::DoNotOptimize(cgg::max_disjoint_size(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaxDisjointDp)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_MaxDisjointBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cgg::Cgg g = cgg::construct_gnk(n, n / 4 > 0 ? n / 4 : 1);
  for (auto _ : state) benchmark::DoNotOptimize(cgg::max_disjoint_bruteforce(g, n).size);
}
BENCHMARK(BM_MaxDisjointBruteForce)->DenseRange(8, 16, 4);

void BM_ConstructGnkl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 4;
  for (auto _ : state) benchmark::DoNotOptimize(cgg::construct_gnkl(n, k, k - 1).edge_count());
}
BENCHMARK(BM_ConstructGnkl)->RangeMultiplier(2)->Range(16, 256);

void BM_Search(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cgg::search_f(n, 2, n - 4).optimum);
}
BENCHMARK(BM_Search)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
