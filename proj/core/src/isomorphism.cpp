#include <algorithm>
#include <map>

#include "tightturan/error.hpp"
#include "tightturan/tight_tree.hpp"

namespace tightturan {

namespace {

std::vector<std::size_t> sorted_degrees(const Hypergraph& g) {
  std::vector<std::size_t> deg;
  for (std::size_t d : g.vertex_degrees()) {
    if (d > 0) deg.push_back(d);
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

/// Degree multiset plus codegree multiset of (r-1)-sets.
std::vector<std::size_t> signature(const Hypergraph& g) {
  std::vector<std::size_t> sig = sorted_degrees(g);
  sig.push_back(0);
  CodegreeIndex index(g);
  std::vector<std::size_t> codeg;
  for (const auto& [d, nbrs] : index.map()) codeg.push_back(nbrs.size());
  std::sort(codeg.begin(), codeg.end());
  sig.insert(sig.end(), codeg.begin(), codeg.end());
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Hypergraph& g, const Hypergraph& h)
      : g_(g), h_(h), g_deg_(g.vertex_degrees()), h_deg_(h.vertex_degrees()) {
    VertexSet gv = g.non_isolated_vertices();
    // order so that each vertex shares edges with as many earlier vertices as possible
    std::vector<bool> chosen(g.vertex_count(), false);
    std::vector<std::size_t> ties(g.vertex_count(), 0);
    while (order_.size() < gv.size()) {
      Vertex best = 0;
      bool have = false;
      for (Vertex v : gv) {
        if (chosen[v]) continue;
        if (!have || ties[v] > ties[best] || (ties[v] == ties[best] && g_deg_[v] > g_deg_[best])) {
          best = v;
          have = true;
        }
      }
      chosen[best] = true;
      order_.push_back(best);
      for (const auto& e : g.edges()) {
        if (!e.contains(best)) continue;
        for (Vertex u : e) {
          if (!chosen[u]) ++ties[u];
        }
      }
    }
    std::vector<std::size_t> position(g.vertex_count(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
    closing_.resize(order_.size());
    for (const auto& e : g.edges()) {
      std::size_t last = 0;
      for (Vertex v : e) last = std::max(last, position[v]);
      closing_[last].push_back(&e);
    }
    h_vertices_ = h.non_isolated_vertices();
    image_.assign(g.vertex_count(), 0);
    used_.assign(h.vertex_count(), false);
  }

  bool run() { return assign(0); }

 private:
  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    Vertex u = order_[pos];
    for (Vertex x : h_vertices_) {
      if (used_[x] || h_deg_[x] != g_deg_[u]) continue;
      image_[u] = x;
      used_[x] = true;
      bool ok = std::all_of(closing_[pos].begin(), closing_[pos].end(), [&](const VertexSet* e) {
        std::vector<Vertex> mapped;
        mapped.reserve(e->size());
        for (Vertex v : *e) mapped.push_back(image_[v]);
        return h_.contains_edge(VertexSet(std::move(mapped)));
      });
      if (ok && assign(pos + 1)) return true;
      used_[x] = false;
    }
    return false;
  }

  const Hypergraph& g_;
  const Hypergraph& h_;
  std::vector<std::size_t> g_deg_;
  std::vector<std::size_t> h_deg_;
  std::vector<Vertex> order_;
  std::vector<std::vector<const VertexSet*>> closing_;
  VertexSet h_vertices_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h) {
  if (g.uniformity() != h.uniformity() || g.edge_count() != h.edge_count()) return false;
  if (sorted_degrees(g) != sorted_degrees(h)) return false;
  return IsoSearch(g, h).run();
}

std::vector<Hypergraph> enumerate_tight_trees(unsigned r, std::size_t t) {
  if (r < 2 || t < 1 || r + t - 1 > 12) {
    throw Error(ErrorCode::Unsupported, "enumerate_tight_trees supports r >= 2, t >= 1, r + t - 1 <= 12");
  }
  const std::size_t n = r + t - 1;
  std::vector<Vertex> first(r);
  for (unsigned i = 0; i < r; ++i) first[i] = i;
  std::vector<Hypergraph> level{Hypergraph(r, n, {VertexSet(first)})};

  for (std::size_t k = 1; k < t; ++k) {
    const auto fresh = static_cast<Vertex>(r + k - 1);
    std::vector<Hypergraph> next;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    for (const auto& tree : level) {
      for (const auto& host : tree.edges()) {
        for (Vertex dropped : host) {
          Hypergraph grown = tree.with_edge(host.without(dropped).with(fresh));
          auto& bucket = buckets[signature(grown)];
          bool known = std::any_of(bucket.begin(), bucket.end(),
                                   [&](std::size_t i) { return are_isomorphic(next[i], grown); });
          if (!known) {
            bucket.push_back(next.size());
            next.push_back(std::move(grown));
          }
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace tightturan
