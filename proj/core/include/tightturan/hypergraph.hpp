#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <vector>

namespace tightturan {

using Vertex = std::uint32_t;

/// Sorted list of distinct vertex ids. Used both for edges and for the
/// (r-1)-sets whose codegrees drive the weight method.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vertices);
  /// Sorts the input; throws Error(InvalidArgument) on repeated vertices.
  explicit VertexSet(std::vector<Vertex> vertices);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  const std::vector<Vertex>& items() const noexcept { return items_; }

  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  std::size_t intersection_size(const VertexSet& other) const noexcept;
  VertexSet without(Vertex v) const;
  VertexSet with(Vertex v) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;
  bool operator==(const VertexSet&) const = default;

 private:
  struct Presorted {};
  VertexSet(Presorted, std::vector<Vertex> sorted) : items_(std::move(sorted)) {}

  std::vector<Vertex> items_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

/// All k-subsets of `s`, in lexicographic order.
std::vector<VertexSet> subsets_of_size(const VertexSet& s, std::size_t k);

/// An r-uniform hypergraph on vertices {0..n-1}. Edges are kept sorted
/// lexicographically; the value is immutable after construction.
class Hypergraph {
 public:
  Hypergraph(unsigned uniformity, std::size_t vertex_count);
  /// Throws Error(InvalidArgument) if an edge has the wrong size, a vertex
  /// out of range, or appears twice.
  Hypergraph(unsigned uniformity, std::size_t vertex_count, std::vector<VertexSet> edges);

  unsigned uniformity() const noexcept { return r_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const VertexSet> edges() const noexcept { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }

  bool contains_edge(const VertexSet& e) const;
  /// Index of `e` in edges(), or edge_count() if absent.
  std::size_t index_of(const VertexSet& e) const;

  /// Vertices lying in at least one edge, ascending.
  VertexSet non_isolated_vertices() const;
  std::vector<std::size_t> vertex_degrees() const;

  Hypergraph with_vertex_count(std::size_t n) const;
  Hypergraph with_edge(const VertexSet& e) const;
  Hypergraph without_edge(const VertexSet& e) const;
  Hypergraph edge_subgraph(std::span<const std::size_t> indices) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  unsigned r_;
  std::size_t n_;
  std::vector<VertexSet> edges_;
};

/// Codegree lookup for (r-1)-subsets: each shadow element maps to the
/// ascending list of vertices completing it to an edge.
class CodegreeIndex {
 public:
  explicit CodegreeIndex(const Hypergraph& g);

  std::size_t codegree(const VertexSet& d) const;
  /// Empty span when `d` is not in the shadow.
  std::span<const Vertex> co_neighbors(const VertexSet& d) const;
  std::size_t shadow_size() const noexcept { return neighbors_.size(); }
  const auto& map() const noexcept { return neighbors_; }

 private:
  std::unordered_map<VertexSet, std::vector<Vertex>, VertexSetHash> neighbors_;
};

std::vector<VertexSet> shadow(const Hypergraph& g);

/// Edges e \ D over all edges containing D; the vertex universe is kept.
Hypergraph link(const Hypergraph& g, const VertexSet& d);

std::size_t degree(const Hypergraph& g, const VertexSet& d);

/// Minimum degree over p-sets that lie inside at least one edge.
/// Throws PreconditionFailed on an empty hypergraph or p outside [1, r-1].
std::size_t min_p_degree(const Hypergraph& g, unsigned p);

}  // namespace tightturan
