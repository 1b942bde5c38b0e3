#include <benchmark/benchmark.h>

#include <random>

#include "tightturan/constructions.hpp"
#include "tightturan/embedding.hpp"

namespace {

using tightturan::Hypergraph;
using tightturan::VertexSet;

Hypergraph tight_path_p43() {
  return Hypergraph(3, 6, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}});
}

/// Worst case for the search: the host is P4^3-free, so every branch fails.
void BM_FindEmbeddingAbsent(benchmark::State& state) {
  const Hypergraph host = tightturan::ekr_family(static_cast<std::size_t>(state.range(0)), 3);
  const Hypergraph tree = tight_path_p43();
  for (auto _ : state) benchmark::DoNotOptimize(tightturan::find_embedding(tree, host));
  state.counters["host_edges"] = static_cast<double>(host.edge_count());
}
BENCHMARK(BM_FindEmbeddingAbsent)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_FindEmbeddingPresent(benchmark::State& state) {
  const Hypergraph host = tightturan::complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
  const Hypergraph tree = tight_path_p43();
  for (auto _ : state) benchmark::DoNotOptimize(tightturan::find_embedding(tree, host));
}
BENCHMARK(BM_FindEmbeddingPresent)->Arg(8)->Arg(24)->Arg(48);

void BM_CountEmbeddings(benchmark::State& state) {
  const Hypergraph host = tightturan::complete_hypergraph(static_cast<std::size_t>(state.range(0)), 3);
  const Hypergraph tree = tight_path_p43();
  std::size_t copies = 0;
  for (auto _ : state) {
    copies = 0;
    tightturan::for_each_embedding(tree, host, [&](const tightturan::Embedding&) {
      ++copies;
      return true;
    });
    benchmark::DoNotOptimize(copies);
  }
  state.counters["embeddings"] = static_cast<double>(copies);
}
BENCHMARK(BM_CountEmbeddings)->Arg(6)->Arg(7)->Arg(8);

}  // namespace
