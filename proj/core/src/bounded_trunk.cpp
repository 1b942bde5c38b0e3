#include <algorithm>
#include <map>
#include <numeric>

#include "tightturan/embedding.hpp"
#include "tightturan/weights.hpp"

namespace tightturan {

Rational bounded_trunk_gamma(unsigned r, std::size_t t, std::size_t c) {
  Rational inv_r(BigInt(1), BigInt(r));
  return Rational(BigInt(t) - 1) * inv_r + (Rational(1) - inv_r) * Rational(BigInt(c) - 1);
}

Rational bounded_trunk_excess(unsigned r, std::size_t c) {
  BigInt r_pow = 1;
  for (unsigned i = 0; i < r; ++i) r_pow *= r;
  return (Rational(r_pow) + 1 - Rational(BigInt(1), BigInt(r))) * Rational(BigInt(c) - 1);
}

namespace {

[[noreturn]] void fail(const std::string& what, EmbedTrace& trace) {
  throw EmbedInvariantError(trace.stage + ": " + what, std::move(trace));
}

BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

BoundedTrunkEmbedding embed_bounded_trunk(const Hypergraph& host, const Hypergraph& tree, const TrunkCert& trunk) {
  const unsigned r = tree.uniformity();
  if (host.uniformity() != r) throw Error(ErrorCode::InvalidArgument, "host and tree have different uniformity");
  if (!is_valid_trunk(tree, trunk)) throw Error(ErrorCode::InvalidArgument, "trunk certificate does not fit the tree");

  EmbedTrace trace;
  trace.r = r;
  trace.t = tree.edge_count();
  trace.c = trunk.trunk_size;
  trace.gamma = bounded_trunk_gamma(r, trace.t, trace.c);
  trace.a_rc = bounded_trunk_excess(r, trace.c);
  trace.threshold = Rational(BigInt(trace.t) - 1, BigInt(r)) + trace.a_rc;

  const CodegreeIndex host_codegrees(host);
  trace.host_edges = host.edge_count();
  trace.host_shadow = host_codegrees.shadow_size();
  if (Rational(trace.host_edges) <= trace.threshold * trace.host_shadow) {
    throw Error(ErrorCode::BelowThreshold, "e(G) = " + std::to_string(trace.host_edges) + " is not above " +
                                               to_fraction_string(trace.threshold) + " * |shadow(G)| = " +
                                               to_fraction_string(trace.threshold * trace.host_shadow));
  }

  Embedding f;
  f.image.assign(tree.vertex_count(), std::nullopt);

  if (trace.t == 1) {
    // gamma = 0 here; any host edge is a copy
    trace.stage = "single-edge";
    const VertexSet& only = tree.edge(0);
    for (std::size_t i = 0; i < r; ++i) f.image[only[i]] = host.edge(0)[i];
    trace.embedding = f;
    trace.stage = "done";
    return {std::move(f), std::move(trace)};
  }

  // heavy / light split on the default weights
  trace.stage = "split";
  std::vector<VertexSet> light;
  for (const auto& e : host.edges()) {
    if (edge_weight(host_codegrees, e) * trace.gamma >= 1) {
      ++trace.heavy_edges;
    } else {
      light.push_back(e);
    }
  }
  trace.light_edges = light.size();
  if (Rational(trace.heavy_edges) > trace.gamma * trace.host_shadow) fail("heavy part exceeds gamma*|shadow|", trace);
  BigInt r_pow = 1;
  for (unsigned i = 0; i < r; ++i) r_pow *= r;
  if (BigInt(trace.light_edges) <= r_pow * (trace.c - 1) * trace.host_shadow) {
    fail("light part is not above r^r (c-1) |shadow|", trace);
  }
  Hypergraph light_graph(r, host.vertex_count(), std::move(light));

  trace.stage = "rainbow";
  RainbowSplit split = rainbow_subgraph(light_graph);
  trace.rainbow_edges = split.rainbow.edge_count();
  trace.rainbow_guarantee = ceil_of(Rational(factorial(r) * trace.light_edges, r_pow));
  if (BigInt(trace.rainbow_edges) < trace.rainbow_guarantee) fail("rainbow subgraph below r!/r^r e(L)", trace);

  trace.stage = "pattern";
  std::map<Pattern, std::vector<VertexSet>> buckets;
  for (const auto& e : split.rainbow.edges()) buckets[pattern(host_codegrees, e, split.parts)].push_back(e);
  trace.pattern_buckets = buckets.size();
  auto majority = buckets.begin();
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    if (it->second.size() > majority->second.size()) majority = it;
  }
  trace.majority_pattern = majority->first;
  trace.bucket_edges = majority->second.size();
  if (BigInt(trace.bucket_edges) <= BigInt(trace.c - 1) * trace.host_shadow) {
    fail("majority pattern bucket is not above (c-1) |shadow(G)|", trace);
  }
  Hypergraph bucket(r, host.vertex_count(), std::move(majority->second));

  trace.stage = "clean";
  trace.cleaned = extract_min_codegree(bucket, trace.c - 1);
  trace.cleaned_min_codegree = min_p_degree(trace.cleaned, r - 1);
  if (trace.cleaned_min_codegree < trace.c) fail("cleaned subgraph has codegree below c", trace);

  // relabel classes so the common pattern becomes the identity
  trace.stage = "relabel";
  std::vector<Color> new_class_of(r);
  for (Color k = 0; k < r; ++k) new_class_of[trace.majority_pattern.order[k]] = k;
  trace.parts = split.parts;
  for (auto& c : trace.parts.color) {
    if (c) c = new_class_of[*c];
  }
  trace.codegree_chain_holds = true;
  for (const auto& e : trace.cleaned.edges()) {
    for (Vertex v : e) {
      Color k = *trace.parts.color[v];
      if (Rational(host_codegrees.codegree(e.without(v))) <= trace.gamma * (k + 1)) {
        trace.codegree_chain_holds = false;
      }
    }
  }
  if (!trace.codegree_chain_holds) fail("codegree chain d(e \\ A_i) > i*gamma does not hold", trace);

  // trunk colouring and extension classes
  trace.stage = "extension-classes";
  const std::size_t c = trace.c;
  TightTreeCert trunk_cert;
  trunk_cert.edge_order.assign(trunk.order.edge_order.begin(), trunk.order.edge_order.begin() + c);
  trunk_cert.new_vertex.assign(trunk.order.new_vertex.begin(), trunk.order.new_vertex.begin() + c);
  trunk_cert.host_index.assign(trunk.order.host_index.begin(), trunk.order.host_index.begin() + c);
  Hypergraph trunk_tree(r, tree.vertex_count(), trunk_cert.edge_order);
  RPartition trunk_colors = r_partition(trunk_tree, trunk_cert);

  std::vector<Color> ext_class(trunk.order.size(), 0);
  std::vector<std::size_t> sizes(r, 0);
  for (std::size_t p = c; p < trunk.order.size(); ++p) {
    const VertexSet& anchor = trunk.order.edge_order[*trunk.anchor[p]];
    VertexSet missing = anchor.set_difference(trunk.order.edge_order[p]);
    ext_class[p] = *trunk_colors.color[missing[0]];
    ++sizes[ext_class[p]];
  }
  trace.trunk_class_order.resize(r);
  std::iota(trace.trunk_class_order.begin(), trace.trunk_class_order.end(), 0);
  std::stable_sort(trace.trunk_class_order.begin(), trace.trunk_class_order.end(),
                   [&](Color a, Color b) { return sizes[a] < sizes[b]; });
  std::vector<Color> trunk_new_class(r);
  for (Color k = 0; k < r; ++k) trunk_new_class[trace.trunk_class_order[k]] = k;
  for (auto& col : trunk_colors.color) {
    if (col) col = trunk_new_class[*col];
  }
  for (std::size_t p = c; p < trunk.order.size(); ++p) ext_class[p] = trunk_new_class[ext_class[p]];
  trace.extension_class_sizes.assign(r, 0);
  for (Color k = 0; k < r; ++k) trace.extension_class_sizes[trunk_new_class[k]] = sizes[k];
  std::size_t partial = 0;
  for (unsigned i = 1; i <= r; ++i) {
    partial += trace.extension_class_sizes[i - 1];
    if (BigInt(partial) * r > BigInt(i) * (trace.t - c)) fail("partial sums exceed i(t-c)/r", trace);
  }

  trace.stage = "trunk-embedding";
  Embedding h = color_preserving_embed(trunk_tree, trunk_cert, trunk_colors, trace.cleaned, trace.parts);
  trace.trunk_embedding = h;
  f = h;

  trace.stage = "extension";
  std::vector<bool> used(host.vertex_count(), false);
  for (const auto& x : f.image) {
    if (x) used[*x] = true;
  }
  for (Color k = 0; k < r; ++k) {
    for (std::size_t p = c; p < trunk.order.size(); ++p) {
      if (ext_class[p] != k) continue;
      Vertex fresh = *trunk.order.new_vertex[p];
      VertexSet image = f.map(trunk.order.edge_order[p].without(fresh));
      auto candidates = host_codegrees.co_neighbors(image);
      if (BigInt(candidates.size()) < floor_of(trace.gamma * (k + 1)) + 1) {
        fail("anchor codegree below floor(i*gamma)+1", trace);
      }
      auto pick = std::find_if(candidates.begin(), candidates.end(), [&](Vertex z) { return !used[z]; });
      if (pick == candidates.end()) fail("no free co-neighbour for an extension edge", trace);
      f.image[fresh] = *pick;
      used[*pick] = true;
      trace.extension_order.push_back(p);
    }
  }

  trace.stage = "verify";
  if (!is_valid_embedding(tree, host, f)) fail("final map is not an embedding", trace);
  trace.embedding = f;
  trace.stage = "done";
  return {std::move(f), std::move(trace)};
}

}  // namespace tightturan
