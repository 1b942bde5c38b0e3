#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tightturan/hypergraph.hpp"

namespace tightturan {

/// An edge ordering e_1..e_t in which every e_i (i >= 2) has a vertex v_i
/// unseen in e_1..e_{i-1}, and e_i - v_i lies inside the host e_{s(i)}, s(i) < i.
/// Index 0 carries no new vertex and no host.
struct TightTreeCert {
  std::vector<VertexSet> edge_order;
  std::vector<std::optional<Vertex>> new_vertex;
  std::vector<std::optional<std::size_t>> host_index;

  std::size_t size() const noexcept { return edge_order.size(); }
};

/// Checks the certificate against T directly from the definition: it must
/// list every edge of T exactly once and satisfy the ordering condition.
bool is_valid_tight_order(const Hypergraph& tree, const TightTreeCert& cert);

/// Backtracking search for a tight ordering. Returns nullopt if `tree` is
/// not a tight tree. Throws PreconditionFailed on an empty hypergraph.
std::optional<TightTreeCert> tight_order(const Hypergraph& tree);

using Color = unsigned;

/// Vertex colouring with colours 0..r-1; vertices outside every edge stay uncoloured.
struct RPartition {
  unsigned classes = 0;
  std::vector<std::optional<Color>> color;

  std::vector<VertexSet> color_classes() const;
  /// Every edge uses each colour exactly once.
  bool is_proper_for(const Hypergraph& g) const;
};

/// The unique proper r-colouring of a tight tree: e_1 receives colours
/// 0..r-1 in vertex order, and each new vertex takes the colour of the vertex
/// of its host that it replaces. Throws InvalidArgument on an invalid cert.
RPartition r_partition(const Hypergraph& tree, const TightTreeCert& cert);

/// Trunk witness. `order` lists the trunk edges first; `anchor[i]` is, for
/// each non-trunk position i, the index (< trunk_size) of a trunk edge that
/// shares r-1 vertices with order.edge_order[i].
struct TrunkCert {
  TightTreeCert order;
  std::size_t trunk_size = 0;
  std::vector<std::optional<std::size_t>> anchor;

  std::vector<VertexSet> trunk_edges() const;
};

/// Validates a trunk certificate independently of the search.
bool is_valid_trunk(const Hypergraph& tree, const TrunkCert& cert);

/// Tries to certify `trunk_indices` (indices into tree.edges()) as a trunk.
std::optional<TrunkCert> certify_trunk(const Hypergraph& tree, const std::vector<std::size_t>& trunk_indices);

struct TrunkNumber {
  std::size_t c;
  TrunkCert cert;
};

/// Minimum trunk size, by subsets of increasing size. Throws NotATightTree.
TrunkNumber trunk_number(const Hypergraph& tree);

/// True iff some edge meets all others in r-1 vertices. Throws NotATightTree.
bool is_star_shaped(const Hypergraph& tree);

/// Non-isomorphic tight r-trees with t edges on {0..r+t-2}, grown edge by
/// edge. Throws Unsupported when r < 2, t < 1 or r + t - 1 > 12.
std::vector<Hypergraph> enumerate_tight_trees(unsigned r, std::size_t t);

/// Isomorphism on non-isolated vertices. Different uniformities compare false.
bool are_isomorphic(const Hypergraph& g, const Hypergraph& h);

}  // namespace tightturan
