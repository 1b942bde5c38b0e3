#include <benchmark/benchmark.h>

#include "tightturan/constructions.hpp"
#include "tightturan/embedding.hpp"
#include "tightturan/tight_tree.hpp"
#include "tightturan/weights.hpp"

namespace {

using tightturan::Hypergraph;
using tightturan::VertexSet;

void BM_DefaultWeights(benchmark::State& state) {
  const Hypergraph host = tightturan::complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(tightturan::default_weights(host).total_edge_weight());
  state.counters["edges"] = static_cast<double>(host.edge_count());
}
BENCHMARK(BM_DefaultWeights)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RainbowSubgraph(benchmark::State& state) {
  const Hypergraph host = tightturan::complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(tightturan::rainbow_subgraph(host));
  state.counters["edges"] = static_cast<double>(host.edge_count());
}
BENCHMARK(BM_RainbowSubgraph)->Arg(20)->Arg(40)->Arg(92)->Unit(benchmark::kMillisecond);

/// The five-edge tree of trunk number 2 into K_n^3, n >= 90.
void BM_EmbedBoundedTrunk(benchmark::State& state) {
  const Hypergraph tree(3, 7, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5},
                               VertexSet{1, 2, 6}});
  const auto trunk = tightturan::trunk_number(tree).cert;
  const Hypergraph host = tightturan::complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(tightturan::embed_bounded_trunk(host, tree, trunk));
}
BENCHMARK(BM_EmbedBoundedTrunk)->Arg(90)->Arg(92)->Unit(benchmark::kMillisecond);

void BM_EmbedSmallTree(benchmark::State& state) {
  const Hypergraph tree(3, 6, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 1, 4}, VertexSet{0, 2, 5}});
  const Hypergraph host = tightturan::complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(tightturan::embed_small_tree(host, tree));
}
BENCHMARK(BM_EmbedSmallTree)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace
