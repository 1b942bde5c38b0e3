#include <benchmark/benchmark.h>

#include "tightturan/extremal_search.hpp"
#include "tightturan/tight_tree.hpp"

namespace {

using tightturan::Hypergraph;
using tightturan::VertexSet;

Hypergraph tight_path_p43() {
  return Hypergraph(3, 6, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}});
}

/// Args: n, threads, orbit pruning (0/1).
void BM_TuranExactTightPath(benchmark::State& state) {
  tightturan::SearchOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  options.orbit_pruning = state.range(2) != 0;
  const Hypergraph tree = tight_path_p43();
  tightturan::SearchResult res;
  for (auto _ : state) {
    res = tightturan::turan_exact(static_cast<std::size_t>(state.range(0)), tree, options);
    benchmark::DoNotOptimize(res.max_edges);
  }
  state.counters["ex"] = static_cast<double>(res.max_edges);
  state.counters["nodes"] = static_cast<double>(res.nodes_explored);
}
BENCHMARK(BM_TuranExactTightPath)
    ->Args({6, 1, 1})
    ->Args({6, 1, 0})
    ->Args({7, 1, 1})
    ->Args({7, 1, 0})
    ->Args({7, 8, 1})
    ->Unit(benchmark::kMillisecond);

/// Every tight 3-tree with four edges at n = 7.
void BM_TuranExactAllFourEdgeTrees(benchmark::State& state) {
  const auto trees = tightturan::enumerate_tight_trees(3, 4);
  for (auto _ : state) {
    for (const auto& tree : trees) benchmark::DoNotOptimize(tightturan::turan_exact(7, tree).max_edges);
  }
  state.counters["trees"] = static_cast<double>(trees.size());
}
BENCHMARK(BM_TuranExactAllFourEdgeTrees)->Unit(benchmark::kMillisecond);

void BM_BetaExactTightPath(benchmark::State& state) {
  const Hypergraph tree = tight_path_p43();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tightturan::beta_exact(static_cast<std::size_t>(state.range(0)), tree).best_ratio);
  }
}
BENCHMARK(BM_BetaExactTightPath)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
