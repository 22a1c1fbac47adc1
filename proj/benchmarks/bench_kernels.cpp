#include <benchmark/benchmark.h>

#include "subtree/exact_count.hpp"
#include "subtree/random_models.hpp"
#include "subtree/tree_tools.hpp"

using namespace subtree;

namespace {

Graph dense_sample(int n, double p) { return sample_gnp({n, p}, Seed{42}); }

void BM_SpanningTreeCount(benchmark::State& state) {
  const Graph g = dense_sample(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(g));
}
BENCHMARK(BM_SpanningTreeCount)->Arg(20)->Arg(50)->Arg(100);

void BM_LogSpanningTreeCount(benchmark::State& state) {
  const Graph g = dense_sample(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(log_spanning_tree_count(g));
}
BENCHMARK(BM_LogSpanningTreeCount)->Arg(100)->Arg(200);

void BM_SubtreeCensus(benchmark::State& state) {
  const Graph g = dense_sample(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(subtree_census(g));
  state.SetLabel("G(n,1/2)");
}
BENCHMARK(BM_SubtreeCensus)->Arg(10)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PairCount(benchmark::State& state) {
  const Graph g = dense_sample(14, 0.5);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pair_count(g, k));
}
BENCHMARK(BM_PairCount)->Arg(1)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TopCensusExact(benchmark::State& state) {
  const Graph g = dense_sample(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(top_census(g, 2));
}
BENCHMARK(BM_TopCensusExact)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TopCensusLog(benchmark::State& state) {
  const Graph g = dense_sample(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(top_census(g, 1));
}
BENCHMARK(BM_TopCensusLog)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_TreeSubtreePolynomial(benchmark::State& state) {
  const auto t = sample_uniform_labelled_tree(static_cast<int>(state.range(0)), Seed{7});
  for (auto _ : state) benchmark::DoNotOptimize(tree_subtree_polynomial(t));
}
BENCHMARK(BM_TreeSubtreePolynomial)->Arg(64)->Arg(256);

void BM_UniformSpanningTree(benchmark::State& state) {
  const Graph g = dense_sample(static_cast<int>(state.range(0)), 0.5);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_spanning_tree(g, trial_seed(Seed{1}, i++)));
}
BENCHMARK(BM_UniformSpanningTree)->Arg(100)->Arg(500);

}  // namespace
BENCHMARK_MAIN();
