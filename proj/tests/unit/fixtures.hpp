#pragma once

#include "tightturan/constructions.hpp"
#include "tightturan/hypergraph.hpp"

namespace tightturan::fixtures {

/// The tight path with four 3-edges: 012, 123, 234, 345.
inline Hypergraph tight_path_p43() {
  return Hypergraph(3, 6, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}});
}

inline Hypergraph single_triple() { return Hypergraph(3, 3, {VertexSet{0, 1, 2}}); }

/// Star-shaped: every edge meets 012 in two vertices.
inline Hypergraph star_012_013_014() {
  return Hypergraph(3, 5, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}, VertexSet{0, 1, 4}});
}

/// P4^3 plus 126, which meets the trunk edge 123 in two vertices; trunk number 2.
inline Hypergraph five_edge_trunk_two() {
  return Hypergraph(3, 7, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5},
                           VertexSet{1, 2, 6}});
}

inline Hypergraph graph_path(std::size_t edges) {
  std::vector<VertexSet> es;
  for (Vertex v = 0; v < edges; ++v) es.push_back(VertexSet{v, v + 1});
  return Hypergraph(2, edges + 1, std::move(es));
}

inline Hypergraph graph_star(std::size_t edges) {
  std::vector<VertexSet> es;
  for (Vertex v = 1; v <= edges; ++v) es.push_back(VertexSet{0, v});
  return Hypergraph(2, edges + 1, std::move(es));
}

/// S_3 centred at 0 with leaf 1 extended to 4.
inline Hypergraph graph_fork() {
  return Hypergraph(2, 5, {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{1, 4}});
}

}  // namespace tightturan::fixtures
