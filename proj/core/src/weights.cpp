#include "tightturan/weights.hpp"

#include "tightturan/error.hpp"

namespace tightturan {

Rational WeightMap::total_edge_weight() const {
  Rational total = 0;
  for (const auto& [e, w] : edge_weights) total += w;
  return total;
}

Rational edge_weight(const CodegreeIndex& index, const VertexSet& e) {
  Rational w = 0;
  for (Vertex v : e) {
    std::size_t d = index.codegree(e.without(v));
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "edge is not part of the indexed hypergraph");
    w += Rational(BigInt(1), BigInt(d));
  }
  return w;
}

WeightMap default_weights(const Hypergraph& g) {
  if (g.empty()) throw Error(ErrorCode::PreconditionFailed, "default weights need a non-empty hypergraph");
  CodegreeIndex index(g);
  WeightMap out;
  for (const auto& [d, nbrs] : index.map()) {
    out.shadow_weights.emplace(d, Rational(BigInt(1), BigInt(nbrs.size())));
  }
  for (const auto& e : g.edges()) {
    Rational w = 0;
    for (Vertex v : e) w += out.shadow_weights.at(e.without(v));
    out.edge_weights.emplace(e, std::move(w));
  }
  return out;
}

}  // namespace tightturan
