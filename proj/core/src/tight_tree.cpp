#include "tightturan/tight_tree.hpp"

#include <algorithm>
#include <set>

#include "tightturan/error.hpp"

namespace tightturan {

namespace {

class OrderSearch {
 public:
  explicit OrderSearch(const Hypergraph& tree)
      : tree_(tree), placed_(tree.edge_count(), false), seen_(tree.vertex_count(), false) {}

  std::optional<TightTreeCert> run() {
    for (std::size_t start = 0; start < tree_.edge_count(); ++start) {
      place(start, std::nullopt, std::nullopt);
      if (extend()) return cert_;
      unplace(start);
    }
    return std::nullopt;
  }

 private:
  void place(std::size_t idx, std::optional<Vertex> fresh, std::optional<std::size_t> host) {
    placed_[idx] = true;
    order_.push_back(idx);
    cert_.edge_order.push_back(tree_.edge(idx));
    cert_.new_vertex.push_back(fresh);
    cert_.host_index.push_back(host);
    for (Vertex v : tree_.edge(idx)) {
      if (!seen_[v]) {
        seen_[v] = true;
        added_.push_back(v);
      }
    }
    added_count_.push_back(added_.size());
  }

  void unplace(std::size_t idx) {
    added_count_.pop_back();
    std::size_t keep = added_count_.empty() ? 0 : added_count_.back();
    while (added_.size() > keep) {
      seen_[added_.back()] = false;
      added_.pop_back();
    }
    placed_[idx] = false;
    order_.pop_back();
    cert_.edge_order.pop_back();
    cert_.new_vertex.pop_back();
    cert_.host_index.pop_back();
  }

  bool extend() {
    if (order_.size() == tree_.edge_count()) return true;
    if (!failed_.insert(placed_).second) return false;
    for (std::size_t idx = 0; idx < tree_.edge_count(); ++idx) {
      if (placed_[idx]) continue;
      const VertexSet& e = tree_.edge(idx);
      std::optional<Vertex> fresh;
      std::size_t unseen = 0;
      for (Vertex v : e) {
        if (!seen_[v]) {
          ++unseen;
          fresh = v;
        }
      }
      if (unseen != 1) continue;
      VertexSet rest = e.without(*fresh);
      std::optional<std::size_t> host;
      for (std::size_t pos = 0; pos < cert_.edge_order.size(); ++pos) {
        if (rest.is_subset_of(cert_.edge_order[pos])) {
          host = pos;
          break;
        }
      }
      if (!host) continue;
      place(idx, fresh, host);
      if (extend()) return true;
      unplace(idx);
    }
    return false;
  }

  const Hypergraph& tree_;
  std::vector<bool> placed_;
  std::vector<bool> seen_;
  std::vector<Vertex> added_;
  std::vector<std::size_t> added_count_;
  std::vector<std::size_t> order_;
  std::set<std::vector<bool>> failed_;
  TightTreeCert cert_;
};

}  // namespace

bool is_valid_tight_order(const Hypergraph& tree, const TightTreeCert& cert) {
  const std::size_t t = cert.edge_order.size();
  if (t != tree.edge_count() || cert.new_vertex.size() != t || cert.host_index.size() != t) return false;
  if (t == 0) return false;
  std::vector<VertexSet> sorted = cert.edge_order;
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), tree.edges().begin(), tree.edges().end())) return false;
  if (cert.new_vertex[0] || cert.host_index[0]) return false;

  std::set<Vertex> seen(cert.edge_order[0].begin(), cert.edge_order[0].end());
  for (std::size_t i = 1; i < t; ++i) {
    const VertexSet& e = cert.edge_order[i];
    if (!cert.new_vertex[i] || !cert.host_index[i]) return false;
    Vertex v = *cert.new_vertex[i];
    std::size_t s = *cert.host_index[i];
    if (!e.contains(v) || seen.count(v) || s >= i) return false;
    if (!e.without(v).is_subset_of(cert.edge_order[s])) return false;
    seen.insert(e.begin(), e.end());
  }
  return true;
}

std::optional<TightTreeCert> tight_order(const Hypergraph& tree) {
  if (tree.empty()) throw Error(ErrorCode::PreconditionFailed, "tight_order needs at least one edge");
  return OrderSearch(tree).run();
}

std::vector<VertexSet> RPartition::color_classes() const {
  std::vector<std::vector<Vertex>> buckets(classes);
  for (std::size_t v = 0; v < color.size(); ++v) {
    if (color[v]) buckets.at(*color[v]).push_back(static_cast<Vertex>(v));
  }
  std::vector<VertexSet> out;
  out.reserve(classes);
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

bool RPartition::is_proper_for(const Hypergraph& g) const {
  if (classes != g.uniformity() || color.size() < g.vertex_count()) return false;
  for (const auto& e : g.edges()) {
    std::vector<bool> used(classes, false);
    for (Vertex v : e) {
      if (!color[v] || *color[v] >= classes || used[*color[v]]) return false;
      used[*color[v]] = true;
    }
  }
  return true;
}

RPartition r_partition(const Hypergraph& tree, const TightTreeCert& cert) {
  if (!is_valid_tight_order(tree, cert)) {
    throw Error(ErrorCode::InvalidArgument, "certificate does not certify this tree");
  }
  RPartition out;
  out.classes = tree.uniformity();
  out.color.assign(tree.vertex_count(), std::nullopt);
  const VertexSet& first = cert.edge_order[0];
  for (std::size_t i = 0; i < first.size(); ++i) out.color[first[i]] = static_cast<Color>(i);
  for (std::size_t i = 1; i < cert.size(); ++i) {
    const VertexSet& host = cert.edge_order[*cert.host_index[i]];
    VertexSet replaced = host.set_difference(cert.edge_order[i]);
    // host and e_i share exactly r-1 vertices, so one vertex is replaced
    out.color[*cert.new_vertex[i]] = out.color[replaced[0]];
  }
  return out;
}

std::vector<VertexSet> TrunkCert::trunk_edges() const {
  return {order.edge_order.begin(), order.edge_order.begin() + static_cast<std::ptrdiff_t>(trunk_size)};
}

bool is_valid_trunk(const Hypergraph& tree, const TrunkCert& cert) {
  if (!is_valid_tight_order(tree, cert.order)) return false;
  if (cert.trunk_size < 1 || cert.trunk_size > cert.order.size()) return false;
  if (cert.anchor.size() != cert.order.size()) return false;
  const unsigned r = tree.uniformity();
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    if (i < cert.trunk_size) {
      if (i > 0 && *cert.order.host_index[i] >= cert.trunk_size) return false;
      if (cert.anchor[i]) return false;
      continue;
    }
    if (!cert.anchor[i] || *cert.anchor[i] >= cert.trunk_size) return false;
    if (cert.order.edge_order[i].intersection_size(cert.order.edge_order[*cert.anchor[i]]) + 1 != r) return false;
  }
  return true;
}

std::optional<TrunkCert> certify_trunk(const Hypergraph& tree, const std::vector<std::size_t>& trunk_indices) {
  if (trunk_indices.empty()) return std::nullopt;
  Hypergraph sub = tree.edge_subgraph(trunk_indices);
  if (sub.edge_count() != trunk_indices.size()) return std::nullopt;
  auto sub_cert = tight_order(sub);
  if (!sub_cert) return std::nullopt;

  VertexSet trunk_vertices = sub.non_isolated_vertices();
  const unsigned r = tree.uniformity();
  TrunkCert out;
  out.order = *sub_cert;
  out.trunk_size = sub.edge_count();
  out.anchor.assign(out.trunk_size, std::nullopt);

  std::set<Vertex> outside_used;
  for (std::size_t idx = 0; idx < tree.edge_count(); ++idx) {
    const VertexSet& e = tree.edge(idx);
    if (sub.contains_edge(e)) continue;
    VertexSet outside = e.set_difference(trunk_vertices);
    if (outside.size() != 1 || !outside_used.insert(outside[0]).second) return std::nullopt;
    std::optional<std::size_t> anchor;
    for (std::size_t pos = 0; pos < out.trunk_size; ++pos) {
      if (e.intersection_size(out.order.edge_order[pos]) + 1 == r) {
        anchor = pos;
        break;
      }
    }
    if (!anchor) return std::nullopt;
    out.order.edge_order.push_back(e);
    out.order.new_vertex.push_back(outside[0]);
    out.order.host_index.push_back(anchor);
    out.anchor.push_back(anchor);
  }
  if (!is_valid_trunk(tree, out)) return std::nullopt;
  return out;
}

TrunkNumber trunk_number(const Hypergraph& tree) {
  if (tree.empty() || !tight_order(tree)) {
    throw Error(ErrorCode::NotATightTree, "trunk_number requires a tight tree");
  }
  const std::size_t t = tree.edge_count();
  for (std::size_t k = 1; k <= t; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (auto cert = certify_trunk(tree, idx)) return {k, std::move(*cert)};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == t - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::InvariantViolation, "a tight tree is always its own trunk");
}

bool is_star_shaped(const Hypergraph& tree) {
  if (tree.empty() || !tight_order(tree)) {
    throw Error(ErrorCode::NotATightTree, "is_star_shaped requires a tight tree");
  }
  const unsigned r = tree.uniformity();
  for (const auto& center : tree.edges()) {
    bool ok = std::all_of(tree.edges().begin(), tree.edges().end(), [&](const VertexSet& e) {
      return e == center || e.intersection_size(center) + 1 == r;
    });
    if (ok) return true;
  }
  return false;
}

}  // namespace tightturan
