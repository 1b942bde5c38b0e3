#include <algorithm>
#include <unordered_set>

#include "tightturan/embedding.hpp"

namespace tightturan {

Embedding color_preserving_embed(const Hypergraph& tree, const TightTreeCert& cert, const RPartition& coloring,
                                 const Hypergraph& host, const RPartition& parts) {
  const unsigned r = tree.uniformity();
  if (host.uniformity() != r || r < 2) {
    throw Error(ErrorCode::InvalidArgument, "colour-preserving embedding needs equal uniformity r >= 2");
  }
  if (!is_valid_tight_order(tree, cert)) throw Error(ErrorCode::InvalidArgument, "invalid tight-tree certificate");
  if (!coloring.is_proper_for(tree)) throw Error(ErrorCode::ImproperColoring, "tree colouring is not proper");
  if (host.empty() || !parts.is_proper_for(host)) {
    throw Error(ErrorCode::NotRPartite, "host is not r-partite under the given parts");
  }
  const std::size_t t = tree.edge_count();
  if (min_p_degree(host, r - 1) < t) {
    throw Error(ErrorCode::CodegreeTooLow, "host (r-1)-codegree is below e(tree)");
  }

  CodegreeIndex index(host);
  Embedding f;
  f.image.assign(tree.vertex_count(), std::nullopt);
  std::vector<bool> used(host.vertex_count(), false);

  const VertexSet& base = host.edge(0);
  for (Vertex u : cert.edge_order[0]) {
    for (Vertex x : base) {
      if (*parts.color[x] == *coloring.color[u]) {
        f.image[u] = x;
        used[x] = true;
      }
    }
  }
  for (std::size_t i = 1; i < cert.size(); ++i) {
    Vertex fresh = *cert.new_vertex[i];
    VertexSet image = f.map(cert.edge_order[i].without(fresh));
    std::optional<Vertex> pick;
    for (Vertex z : index.co_neighbors(image)) {
      if (!used[z]) {
        pick = z;
        break;
      }
    }
    // at most i-1 of the >= t co-neighbours are already used
    if (!pick) throw Error(ErrorCode::InvariantViolation, "no free co-neighbour during greedy extension");
    f.image[fresh] = *pick;
    used[*pick] = true;
  }
  return f;
}

Hypergraph extract_min_codegree(const Hypergraph& g, std::size_t q) {
  if (BigInt(g.edge_count()) <= BigInt(q) * shadow(g).size()) {
    throw Error(ErrorCode::PreconditionFailed, "extract_min_codegree requires e(G) > q*|shadow(G)|");
  }
  Hypergraph current = g;
  while (true) {
    CodegreeIndex index(current);
    std::unordered_set<VertexSet, VertexSetHash> low;
    for (const auto& [d, nbrs] : index.map()) {
      if (nbrs.size() <= q) low.insert(d);
    }
    if (low.empty()) return current;
    std::vector<VertexSet> kept;
    for (const auto& e : current.edges()) {
      bool hit = std::any_of(e.begin(), e.end(), [&](Vertex v) { return low.count(e.without(v)) > 0; });
      if (!hit) kept.push_back(e);
    }
    current = Hypergraph(g.uniformity(), g.vertex_count(), std::move(kept));
  }
}

DenseLink dense_link_vertex(const Hypergraph& g, const Rational& alpha) {
  const unsigned r = g.uniformity();
  if (r < 3) throw Error(ErrorCode::PreconditionFailed, "dense_link_vertex requires r >= 3");
  if (Rational(g.edge_count()) <= alpha / r * Rational(shadow(g).size())) {
    throw Error(ErrorCode::PreconditionFailed, "dense_link_vertex requires e(G) > alpha/r * |shadow(G)|");
  }
  auto deg = g.vertex_degrees();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    Hypergraph l = link(g, VertexSet{static_cast<Vertex>(v)});
    if (Rational(l.edge_count()) > alpha / (r - 1) * Rational(shadow(l).size())) {
      return {static_cast<Vertex>(v), std::move(l)};
    }
  }
  throw Error(ErrorCode::InvariantViolation, "no vertex has a dense link although the density hypothesis holds");
}

RainbowSplit rainbow_subgraph(const Hypergraph& g) {
  const unsigned r = g.uniformity();
  const std::size_t n = g.vertex_count();
  // weight[m] = m! * r^(r-m): r^r times the chance that m unassigned
  // vertices fill the m missing classes.
  std::vector<BigInt> weight(r + 1);
  for (unsigned m = 0; m <= r; ++m) {
    BigInt w = 1;
    for (unsigned i = 2; i <= m; ++i) w *= i;
    for (unsigned i = 0; i < r - m; ++i) w *= r;
    weight[m] = w;
  }
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    for (Vertex v : g.edge(i)) incident[v].push_back(i);
  }

  RainbowSplit out{RPartition{r, std::vector<std::optional<Color>>(n, std::nullopt)}, Hypergraph(r, n)};
  auto& color = out.parts.color;
  auto conditional = [&](const VertexSet& e) -> const BigInt* {
    std::vector<bool> seen(r, false);
    unsigned unassigned = 0;
    for (Vertex u : e) {
      if (!color[u]) {
        ++unassigned;
      } else if (seen[*color[u]]) {
        return nullptr;
      } else {
        seen[*color[u]] = true;
      }
    }
    return &weight[unassigned];
  };

  for (std::size_t v = 0; v < n; ++v) {
    Color best = 0;
    BigInt best_value = -1;
    for (Color k = 0; k < r; ++k) {
      color[v] = k;
      BigInt value = 0;
      for (std::size_t i : incident[v]) {
        if (const BigInt* w = conditional(g.edge(i))) value += *w;
      }
      if (value > best_value) {
        best_value = value;
        best = k;
      }
    }
    color[v] = best;
  }

  std::vector<VertexSet> kept;
  for (const auto& e : g.edges()) {
    if (conditional(e)) kept.push_back(e);
  }
  out.rainbow = Hypergraph(r, n, std::move(kept));
  BigInt required = ceil_of(Rational(weight[r] * g.edge_count(), weight[0]));
  if (BigInt(out.rainbow.edge_count()) < required) {
    throw Error(ErrorCode::InvariantViolation, "conditional expectations fell below the averaging bound");
  }
  return out;
}

Pattern pattern(const CodegreeIndex& g, const VertexSet& e, const RPartition& parts) {
  const unsigned r = parts.classes;
  if (e.size() != r) throw Error(ErrorCode::InvalidArgument, "edge size differs from the number of classes");
  std::vector<std::optional<Vertex>> by_class(r);
  for (Vertex v : e) {
    if (v >= parts.color.size() || !parts.color[v] || *parts.color[v] >= r || by_class[*parts.color[v]]) {
      throw Error(ErrorCode::InvalidArgument, "edge is not rainbow under the partition");
    }
    by_class[*parts.color[v]] = v;
  }
  std::vector<std::pair<std::size_t, Color>> keyed;
  for (Color k = 0; k < r; ++k) keyed.emplace_back(g.codegree(e.without(*by_class[k])), k);
  std::sort(keyed.begin(), keyed.end());
  Pattern out;
  for (auto& [d, k] : keyed) out.order.push_back(k);
  return out;
}

Pattern pattern(const Hypergraph& g, const VertexSet& e, const RPartition& parts) {
  return pattern(CodegreeIndex(g), e, parts);
}

}  // namespace tightturan
