#pragma once

#include <nlohmann/json.hpp>

#include "tightturan/constructions.hpp"
#include "tightturan/embedding.hpp"
#include "tightturan/extremal_search.hpp"
#include "tightturan/rational.hpp"
#include "tightturan/tight_tree.hpp"
#include "tightturan/weights.hpp"

namespace tightturan {

using Json = nlohmann::json;

/// {"num": p, "den": q} in lowest terms with q > 0. Components that do not
/// fit in 64 bits are emitted as decimal strings; never as floating point.
Json json_of(const Rational& q);
Json json_of(const BigInt& z);
Json json_of(const VertexSet& s);
/// Canonical text form, so the value re-parses with parse_hypergraph.
Json json_of(const Hypergraph& g);
/// Images in pattern-vertex order; unmapped vertices are null.
Json json_of(const Embedding& f);
Json json_of(const TightTreeCert& cert);
Json json_of(const RPartition& parts);
Json json_of(const TrunkCert& cert);
Json json_of(const WeightMap& w);
Json json_of(const EmbedTrace& trace);
Json json_of(const SearchResult& result);
Json json_of(const RatioResult& result);
Json json_of(const KalaiReport& report);
Json json_of(const ShadowBoundReport& report);
Json json_of(const Tournament& d);
Json json_of(const PackingResult& packing);

/// Inverse of json_of(Rational); accepts integers or decimal strings.
Rational rational_from_json(const Json& j);

}  // namespace tightturan
