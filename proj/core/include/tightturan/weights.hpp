#pragma once

#include <map>

#include "tightturan/hypergraph.hpp"
#include "tightturan/rational.hpp"

namespace tightturan {

/// The default weight function: w(D) = 1/d(D) on shadow elements and
/// w(e) = sum of w(D) over the r boundary (r-1)-sets of e.
struct WeightMap {
  std::map<VertexSet, Rational> shadow_weights;
  std::map<VertexSet, Rational> edge_weights;

  Rational total_edge_weight() const;
};

/// Throws PreconditionFailed on an empty hypergraph.
WeightMap default_weights(const Hypergraph& g);

/// w(e) for a single edge given a prebuilt codegree index.
Rational edge_weight(const CodegreeIndex& index, const VertexSet& e);

}  // namespace tightturan
