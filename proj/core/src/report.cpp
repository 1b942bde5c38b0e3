#include "tightturan/report.hpp"

#include <limits>

#include "tightturan/hypergraph_io.hpp"

namespace tightturan {

Json json_of(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

Json json_of(const Rational& q) { return Json{{"num", json_of(numerator_of(q))}, {"den", json_of(denominator_of(q))}}; }

Rational rational_from_json(const Json& j) {
  auto part = [](const Json& v) {
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_string()) return BigInt(v.get<std::string>());
    throw Error(ErrorCode::ParseError, "rational component must be an integer or a decimal string");
  };
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw Error(ErrorCode::ParseError, "rational must be an object with num and den");
  }
  BigInt den = part(j.at("den"));
  if (den == 0) throw Error(ErrorCode::ParseError, "rational with zero denominator");
  return Rational(part(j.at("num")), den);
}

Json json_of(const VertexSet& s) { return Json(s.items()); }

Json json_of(const Hypergraph& g) { return format_hypergraph(g); }

Json json_of(const Embedding& f) {
  Json out = Json::array();
  for (const auto& x : f.image) out.push_back(x ? Json(*x) : Json(nullptr));
  return out;
}

namespace {

template <typename T>
Json optional_list(const std::vector<std::optional<T>>& items) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(x ? Json(*x) : Json(nullptr));
  return out;
}

Json edge_list(const std::vector<VertexSet>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(json_of(e));
  return out;
}

}  // namespace

Json json_of(const TightTreeCert& cert) {
  return Json{{"edge_order", edge_list(cert.edge_order)},
              {"new_vertex", optional_list(cert.new_vertex)},
              {"host_index", optional_list(cert.host_index)}};
}

Json json_of(const RPartition& parts) {
  return Json{{"classes", edge_list(parts.color_classes())}, {"color", optional_list(parts.color)}};
}

Json json_of(const TrunkCert& cert) {
  return Json{{"trunk_size", cert.trunk_size},
              {"trunk_edges", edge_list(cert.trunk_edges())},
              {"order", json_of(cert.order)},
              {"anchor", optional_list(cert.anchor)}};
}

Json json_of(const WeightMap& w) {
  Json shadow = Json::array();
  for (const auto& [d, q] : w.shadow_weights) shadow.push_back(Json{{"set", json_of(d)}, {"weight", json_of(q)}});
  Json edges = Json::array();
  for (const auto& [e, q] : w.edge_weights) edges.push_back(Json{{"edge", json_of(e)}, {"weight", json_of(q)}});
  return Json{{"shadow_weights", shadow}, {"edge_weights", edges}, {"total_edge_weight", json_of(w.total_edge_weight())}};
}

Json json_of(const EmbedTrace& trace) {
  return Json{
      {"r", trace.r},
      {"t", trace.t},
      {"c", trace.c},
      {"gamma", json_of(trace.gamma)},
      {"a_rc", json_of(trace.a_rc)},
      {"threshold", json_of(trace.threshold)},
      {"host_edges", trace.host_edges},
      {"host_shadow", trace.host_shadow},
      {"heavy_edges", trace.heavy_edges},
      {"light_edges", trace.light_edges},
      {"parts", json_of(trace.parts)},
      {"rainbow_edges", trace.rainbow_edges},
      {"rainbow_guarantee", json_of(trace.rainbow_guarantee)},
      {"majority_pattern", trace.majority_pattern.order},
      {"pattern_buckets", trace.pattern_buckets},
      {"bucket_edges", trace.bucket_edges},
      {"cleaned_edges", trace.cleaned.edge_count()},
      {"cleaned_min_codegree", trace.cleaned_min_codegree},
      {"codegree_chain_holds", trace.codegree_chain_holds},
      {"trunk_class_order", trace.trunk_class_order},
      {"extension_class_sizes", trace.extension_class_sizes},
      {"extension_order", trace.extension_order},
      {"trunk_embedding", json_of(trace.trunk_embedding)},
      {"embedding", json_of(trace.embedding)},
      {"stage", trace.stage},
  };
}

Json json_of(const SearchResult& result) {
  return Json{{"max_edges", result.max_edges},
              {"witness", json_of(result.witness)},
              {"nodes_explored", result.nodes_explored},
              {"exhaustive", result.exhaustive}};
}

Json json_of(const RatioResult& result) {
  return Json{{"best_ratio", json_of(result.best_ratio)},
              {"witness", json_of(result.witness)},
              {"nodes_explored", result.nodes_explored},
              {"exhaustive", result.exhaustive}};
}

Json json_of(const KalaiReport& report) {
  return Json{{"search", json_of(report.search)},
              {"bound", json_of(report.bound)},
              {"slack", json_of(report.slack)},
              {"pass", report.pass}};
}

Json json_of(const ShadowBoundReport& report) {
  return Json{{"forbidden_free", report.forbidden_free},
              {"copy", report.copy ? json_of(*report.copy) : Json(nullptr)},
              {"edges", report.edges},
              {"shadow_size", report.shadow_size},
              {"coefficient", json_of(report.coefficient)},
              {"bound", json_of(report.bound)},
              {"inequality_holds", report.inequality_holds},
              {"pass", report.pass}};
}

Json json_of(const Tournament& d) {
  Json arcs = Json::array();
  for (auto [i, j] : d.arcs) arcs.push_back(Json::array({i, j}));
  return Json{{"vertex_count", d.vertex_count}, {"arcs", arcs}};
}

Json json_of(const PackingResult& packing) {
  return Json{{"m", packing.m},
              {"vertex_sets", edge_list(packing.vertex_sets)},
              {"union", json_of(packing.union_graph)},
              {"candidates_examined", packing.candidates_examined}};
}

}  // namespace tightturan
