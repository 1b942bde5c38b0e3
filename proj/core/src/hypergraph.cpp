#include "tightturan/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tightturan/error.hpp"

namespace tightturan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::NotATightTree: return "not-a-tight-tree";
    case ErrorCode::PreconditionFailed: return "precondition-failed";
    case ErrorCode::NotRPartite: return "not-r-partite";
    case ErrorCode::CodegreeTooLow: return "codegree-too-low";
    case ErrorCode::ImproperColoring: return "improper-coloring";
    case ErrorCode::BelowThreshold: return "below-threshold";
    case ErrorCode::InvariantViolation: return "invariant-violation";
    case ErrorCode::Unsupported: return "unsupported";
  }
  return "unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> vertices)
    : VertexSet(std::vector<Vertex>(vertices)) {}

VertexSet::VertexSet(std::vector<Vertex> vertices) : items_(std::move(vertices)) {
  std::sort(items_.begin(), items_.end());
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw Error(ErrorCode::InvalidArgument, "vertex set contains a repeated vertex");
  }
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  std::size_t count = 0;
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

VertexSet VertexSet::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(items_.size());
  for (Vertex u : items_) {
    if (u != v) out.push_back(u);
  }
  return VertexSet(Presorted{}, std::move(out));
}

VertexSet VertexSet::with(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> out = items_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return VertexSet(Presorted{}, std::move(out));
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out));
  return VertexSet(Presorted{}, std::move(out));
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out));
  return VertexSet(Presorted{}, std::move(out));
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<VertexSet> subsets_of_size(const VertexSet& s, std::size_t k) {
  std::vector<VertexSet> out;
  const std::size_t n = s.size();
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> pick;
    pick.reserve(k);
    for (std::size_t i : idx) pick.push_back(s[i]);
    out.emplace_back(std::move(pick));
    // advance to the next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// --------------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(unsigned uniformity, std::size_t vertex_count)
    : r_(uniformity), n_(vertex_count) {
  if (r_ < 1) throw Error(ErrorCode::InvalidArgument, "uniformity must be at least 1");
}

Hypergraph::Hypergraph(unsigned uniformity, std::size_t vertex_count, std::vector<VertexSet> edges)
    : Hypergraph(uniformity, vertex_count) {
  for (const auto& e : edges) {
    if (e.size() != r_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r_));
    }
    if (!e.empty() && e[e.size() - 1] >= n_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge vertex " + std::to_string(e[e.size() - 1]) + " out of range for n=" +
                      std::to_string(n_));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate edge");
  }
  edges_ = std::move(edges);
}

bool Hypergraph::contains_edge(const VertexSet& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Hypergraph::index_of(const VertexSet& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet Hypergraph::non_isolated_vertices() const {
  std::vector<bool> seen(n_, false);
  for (const auto& e : edges_) {
    for (Vertex v : e) seen[v] = true;
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (seen[v]) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

std::vector<std::size_t> Hypergraph::vertex_degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    for (Vertex v : e) ++deg[v];
  }
  return deg;
}

Hypergraph Hypergraph::with_vertex_count(std::size_t n) const {
  return Hypergraph(r_, n, edges_);
}

Hypergraph Hypergraph::with_edge(const VertexSet& e) const {
  std::vector<VertexSet> edges = edges_;
  edges.push_back(e);
  return Hypergraph(r_, n_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(const VertexSet& e) const {
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (const auto& f : edges_) {
    if (f != e) edges.push_back(f);
  }
  return Hypergraph(r_, n_, std::move(edges));
}

Hypergraph Hypergraph::edge_subgraph(std::span<const std::size_t> indices) const {
  std::vector<VertexSet> edges;
  edges.reserve(indices.size());
  for (std::size_t i : indices) edges.push_back(edges_.at(i));
  return Hypergraph(r_, n_, std::move(edges));
}

// ------------------------------------------------------------ CodegreeIndex

CodegreeIndex::CodegreeIndex(const Hypergraph& g) {
  for (const auto& e : g.edges()) {
    for (Vertex v : e) neighbors_[e.without(v)].push_back(v);
  }
  for (auto& [d, nbrs] : neighbors_) std::sort(nbrs.begin(), nbrs.end());
}

std::size_t CodegreeIndex::codegree(const VertexSet& d) const {
  auto it = neighbors_.find(d);
  return it == neighbors_.end() ? 0 : it->second.size();
}

std::span<const Vertex> CodegreeIndex::co_neighbors(const VertexSet& d) const {
  auto it = neighbors_.find(d);
  if (it == neighbors_.end()) return {};
  return it->second;
}

// --------------------------------------------------------------- operations

std::vector<VertexSet> shadow(const Hypergraph& g) {
  std::vector<VertexSet> out;
  if (g.uniformity() < 1) return out;
  for (const auto& e : g.edges()) {
    for (Vertex v : e) out.push_back(e.without(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Hypergraph link(const Hypergraph& g, const VertexSet& d) {
  if (d.size() >= g.uniformity()) {
    throw Error(ErrorCode::InvalidArgument, "link requires |D| < r");
  }
  std::vector<VertexSet> edges;
  for (const auto& e : g.edges()) {
    if (d.is_subset_of(e)) edges.push_back(e.set_difference(d));
  }
  return Hypergraph(g.uniformity() - static_cast<unsigned>(d.size()), g.vertex_count(),
                    std::move(edges));
}

std::size_t degree(const Hypergraph& g, const VertexSet& d) {
  if (d.size() > g.uniformity()) {
    throw Error(ErrorCode::InvalidArgument, "degree requires |D| <= r");
  }
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [&](const VertexSet& e) { return d.is_subset_of(e); }));
}

std::size_t min_p_degree(const Hypergraph& g, unsigned p) {
  if (p < 1 || p + 1 > g.uniformity()) {
    throw Error(ErrorCode::PreconditionFailed, "min_p_degree requires 1 <= p <= r-1");
  }
  if (g.empty()) {
    throw Error(ErrorCode::PreconditionFailed, "min_p_degree is undefined on an empty hypergraph");
  }
  std::map<VertexSet, std::size_t> counts;
  for (const auto& e : g.edges()) {
    for (auto& d : subsets_of_size(e, p)) ++counts[d];
  }
  std::size_t best = g.edge_count();
  for (const auto& [d, c] : counts) best = std::min(best, c);
  return best;
}

}  // namespace tightturan
