#include <algorithm>
#include <numeric>

#include "tightturan/embedding.hpp"

namespace tightturan {

VertexSet Embedding::map(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) {
    if (v >= image.size() || !image[v]) throw Error(ErrorCode::InvalidArgument, "vertex is not mapped");
    out.push_back(*image[v]);
  }
  return VertexSet(std::move(out));
}

bool is_valid_embedding(const Hypergraph& pattern, const Hypergraph& host, const Embedding& f) {
  if (pattern.uniformity() != host.uniformity()) return false;
  if (f.image.size() != pattern.vertex_count()) return false;
  std::vector<bool> used(host.vertex_count(), false);
  for (const auto& x : f.image) {
    if (!x) continue;
    if (*x >= host.vertex_count() || used[*x]) return false;
    used[*x] = true;
  }
  for (const auto& e : pattern.edges()) {
    std::vector<Vertex> mapped;
    for (Vertex v : e) {
      if (!f.image[v]) return false;
      mapped.push_back(*f.image[v]);
    }
    if (!host.contains_edge(VertexSet(std::move(mapped)))) return false;
  }
  return true;
}

namespace {

struct HostView {
  explicit HostView(const Hypergraph& g) : graph(g), codegrees(g), degrees(g.vertex_degrees()) {
    adjacency.resize(g.vertex_count());
    for (const auto& e : g.edges()) {
      for (Vertex u : e) {
        for (Vertex v : e) {
          if (u != v) adjacency[u].push_back(v);
        }
      }
    }
    for (auto& a : adjacency) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  const Hypergraph& graph;
  CodegreeIndex codegrees;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<Vertex>> adjacency;
};

/// Vertex-by-vertex backtracking. Each pattern vertex draws candidates from
/// the co-neighbourhood of an already mapped (r-1)-set when one exists, else
/// from the host neighbourhood of a mapped vertex, else from all vertices.
class ContainmentSearch {
 public:
  ContainmentSearch(const Hypergraph& pattern, const HostView& host, std::vector<std::pair<Vertex, Vertex>> seed)
      : pattern_(pattern), host_(host), seed_(std::move(seed)), pattern_degree_(pattern.vertex_degrees()) {
    const std::size_t n = pattern.vertex_count();
    VertexSet active = pattern.non_isolated_vertices();
    std::vector<bool> chosen(n, false);
    for (auto [u, x] : seed_) {
      chosen[u] = true;
      order_.push_back(u);
    }
    while (order_.size() < active.size()) {
      std::optional<Vertex> best;
      std::tuple<int, std::size_t, std::size_t> best_key{};
      for (Vertex u : active) {
        if (chosen[u]) continue;
        int anchored = 0;
        std::size_t shared = 0;
        for (const auto& e : pattern.edges()) {
          if (!e.contains(u)) continue;
          std::size_t known = 0;
          for (Vertex v : e) known += (v != u && chosen[v]) ? 1 : 0;
          if (known + 1 == e.size()) anchored = 1;
          shared += known;
        }
        auto key = std::make_tuple(anchored, shared, pattern_degree_[u]);
        if (!best || key > best_key) {
          best = u;
          best_key = key;
        }
      }
      chosen[*best] = true;
      order_.push_back(*best);
    }

    std::vector<std::size_t> position(n, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
    closing_.resize(order_.size());
    anchor_.resize(order_.size());
    neighbor_.resize(order_.size());
    for (const auto& e : pattern.edges()) {
      std::size_t last = 0;
      for (Vertex v : e) last = std::max(last, position[v]);
      closing_[last].push_back(&e);
      Vertex closer = order_[last];
      if (!anchor_[last]) anchor_[last] = e.without(closer);
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (anchor_[i]) continue;
      for (const auto& e : pattern.edges()) {
        if (!e.contains(order_[i])) continue;
        for (Vertex v : e) {
          if (position[v] < i && (!neighbor_[i] || position[v] < position[*neighbor_[i]])) neighbor_[i] = v;
        }
      }
    }
    current_.image.assign(n, std::nullopt);
    used_.assign(host.graph.vertex_count(), false);
  }

  void run(const std::function<bool(const Embedding&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    assign(0);
  }

 private:
  bool try_vertex(std::size_t pos, Vertex u, Vertex x) {
    if (used_[x] || host_.degrees[x] < pattern_degree_[u]) return true;
    current_.image[u] = x;
    used_[x] = true;
    bool ok = std::all_of(closing_[pos].begin(), closing_[pos].end(),
                          [&](const VertexSet* e) { return host_.graph.contains_edge(current_.map(*e)); });
    if (ok) assign(pos + 1);
    used_[x] = false;
    current_.image[u] = std::nullopt;
    return !stopped_;
  }

  void assign(std::size_t pos) {
    if (stopped_) return;
    if (pos == order_.size()) {
      if (!(*visit_)(current_)) stopped_ = true;
      return;
    }
    Vertex u = order_[pos];
    if (pos < seed_.size()) {
      try_vertex(pos, u, seed_[pos].second);
      return;
    }
    if (anchor_[pos]) {
      VertexSet image = current_.map(*anchor_[pos]);
      auto span = host_.codegrees.co_neighbors(image);
      std::vector<Vertex> candidates(span.begin(), span.end());
      for (Vertex x : candidates) {
        if (!try_vertex(pos, u, x)) return;
      }
    } else if (neighbor_[pos]) {
      for (Vertex x : host_.adjacency[*current_.image[*neighbor_[pos]]]) {
        if (!try_vertex(pos, u, x)) return;
      }
    } else {
      for (Vertex x = 0; x < host_.graph.vertex_count(); ++x) {
        if (!try_vertex(pos, u, x)) return;
      }
    }
  }

  const Hypergraph& pattern_;
  const HostView& host_;
  std::vector<std::pair<Vertex, Vertex>> seed_;
  std::vector<std::size_t> pattern_degree_;
  std::vector<Vertex> order_;
  std::vector<std::vector<const VertexSet*>> closing_;
  std::vector<std::optional<VertexSet>> anchor_;
  std::vector<std::optional<Vertex>> neighbor_;
  Embedding current_;
  std::vector<bool> used_;
  const std::function<bool(const Embedding&)>* visit_ = nullptr;
  bool stopped_ = false;
};

void check_uniformity(const Hypergraph& pattern, const Hypergraph& host) {
  if (pattern.uniformity() != host.uniformity()) {
    throw Error(ErrorCode::InvalidArgument, "pattern and host have different uniformity");
  }
}

}  // namespace

void for_each_embedding(const Hypergraph& pattern, const Hypergraph& host,
                        const std::function<bool(const Embedding&)>& visit) {
  check_uniformity(pattern, host);
  if (pattern.empty()) {
    visit(Embedding{std::vector<std::optional<Vertex>>(pattern.vertex_count())});
    return;
  }
  if (pattern.non_isolated_vertices().size() > host.vertex_count()) return;
  HostView view(host);
  ContainmentSearch(pattern, view, {}).run(visit);
}

std::optional<Embedding> find_embedding(const Hypergraph& pattern, const Hypergraph& host) {
  std::optional<Embedding> found;
  for_each_embedding(pattern, host, [&](const Embedding& f) {
    found = f;
    return false;
  });
  return found;
}

std::optional<Embedding> find_embedding_using(const Hypergraph& pattern, const Hypergraph& host,
                                              const VertexSet& edge) {
  check_uniformity(pattern, host);
  if (!host.contains_edge(edge)) throw Error(ErrorCode::InvalidArgument, "anchor edge is not in the host");
  if (pattern.empty() || pattern.non_isolated_vertices().size() > host.vertex_count()) return std::nullopt;
  HostView view(host);
  std::optional<Embedding> found;
  std::function<bool(const Embedding&)> keep = [&](const Embedding& f) {
    found = f;
    return false;
  };
  for (const auto& tau : pattern.edges()) {
    std::vector<Vertex> target(edge.begin(), edge.end());
    do {
      std::vector<std::pair<Vertex, Vertex>> seed;
      for (std::size_t i = 0; i < tau.size(); ++i) seed.emplace_back(tau[i], target[i]);
      ContainmentSearch(pattern, view, std::move(seed)).run(keep);
      if (found) return found;
    } while (std::next_permutation(target.begin(), target.end()));
  }
  return std::nullopt;
}

}  // namespace tightturan
