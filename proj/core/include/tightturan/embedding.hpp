#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tightturan/error.hpp"
#include "tightturan/hypergraph.hpp"
#include "tightturan/rational.hpp"
#include "tightturan/tight_tree.hpp"

namespace tightturan {

/// Vertex map from a pattern into a host. Isolated pattern vertices stay unmapped.
struct Embedding {
  std::vector<std::optional<Vertex>> image;

  VertexSet map(const VertexSet& s) const;
};

/// Injective on mapped vertices, every non-isolated pattern vertex mapped,
/// and every pattern edge lands on a host edge.
bool is_valid_embedding(const Hypergraph& pattern, const Hypergraph& host, const Embedding& f);

// ---------------------------------------------------------------- containment

/// Visits embeddings of `pattern` into `host` in a fixed deterministic order
/// until `visit` returns false. Throws InvalidArgument on uniformity mismatch.
void for_each_embedding(const Hypergraph& pattern, const Hypergraph& host,
                        const std::function<bool(const Embedding&)>& visit);

/// First embedding in the deterministic order, or nullopt if host is pattern-free.
std::optional<Embedding> find_embedding(const Hypergraph& pattern, const Hypergraph& host);

/// Embedding whose image uses `edge` (an edge of host), or nullopt.
std::optional<Embedding> find_embedding_using(const Hypergraph& pattern, const Hypergraph& host,
                                              const VertexSet& edge);

// ------------------------------------------------------- greedy tree embedding

/// Greedy colour-preserving embedding of a tight tree into an r-partite host
/// whose (r-1)-codegrees are all at least e(tree). Vertex u lands in the part
/// coloured coloring.color[u]. Precondition failures raise NotRPartite,
/// CodegreeTooLow or ImproperColoring.
Embedding color_preserving_embed(const Hypergraph& tree, const TightTreeCert& cert, const RPartition& coloring,
                                 const Hypergraph& host, const RPartition& parts);

/// Subgraph with every (r-1)-codegree >= q+1 and e > q*|shadow|, obtained by
/// deleting all edges through low-codegree (r-1)-sets until none remain.
/// Throws PreconditionFailed unless e(g) > q*|shadow(g)|.
Hypergraph extract_min_codegree(const Hypergraph& g, std::size_t q);

struct DenseLink {
  Vertex vertex;
  Hypergraph link;
};

/// First vertex whose link satisfies e(link) > alpha/(r-1) * |shadow(link)|.
/// Requires r >= 3 and e(g) > alpha/r * |shadow(g)|.
DenseLink dense_link_vertex(const Hypergraph& g, const Rational& alpha);

struct RainbowSplit {
  RPartition parts;
  Hypergraph rainbow;
};

/// r-partition found by conditional expectations, and the rainbow edges
/// under it; keeps at least ceil(r!/r^r * e(g)) edges.
RainbowSplit rainbow_subgraph(const Hypergraph& g);

/// Permutation of classes ordering the codegrees d(e \ A_k) ascending.
struct Pattern {
  std::vector<Color> order;

  auto operator<=>(const Pattern&) const = default;
};

Pattern pattern(const Hypergraph& g, const VertexSet& e, const RPartition& parts);
Pattern pattern(const CodegreeIndex& g, const VertexSet& e, const RPartition& parts);

// ----------------------------------------------------------- bounded trunk

/// Every intermediate object of the bounded-trunk embedding, kept for audit.
struct EmbedTrace {
  unsigned r = 0;
  std::size_t t = 0;
  std::size_t c = 0;
  Rational gamma;
  Rational a_rc;
  Rational threshold;
  std::size_t host_edges = 0;
  std::size_t host_shadow = 0;

  std::size_t heavy_edges = 0;  // w(e) >= 1/gamma
  std::size_t light_edges = 0;
  RPartition parts;             // relabelled so the majority pattern is the identity
  std::size_t rainbow_edges = 0;
  BigInt rainbow_guarantee = 0;  // ceil(r!/r^r * light_edges)
  Pattern majority_pattern;
  std::size_t pattern_buckets = 0;
  std::size_t bucket_edges = 0;
  Hypergraph cleaned{1, 0};
  std::size_t cleaned_min_codegree = 0;
  bool codegree_chain_holds = false;

  std::vector<Color> trunk_class_order;  // new class k is old class trunk_class_order[k]
  std::vector<std::size_t> extension_class_sizes;
  std::vector<std::size_t> extension_order;  // positions in the trunk certificate
  Embedding trunk_embedding;
  Embedding embedding;
  std::string stage = "start";
};

/// Raised when a stage contradicts its guarantee; carries the partial trace.
class EmbedInvariantError : public Error {
 public:
  EmbedInvariantError(const std::string& what, EmbedTrace trace)
      : Error(ErrorCode::InvariantViolation, what), trace_(std::move(trace)) {}
  const EmbedTrace& trace() const noexcept { return trace_; }

 private:
  EmbedTrace trace_;
};

Rational bounded_trunk_gamma(unsigned r, std::size_t t, std::size_t c);
Rational bounded_trunk_excess(unsigned r, std::size_t c);

struct BoundedTrunkEmbedding {
  Embedding embedding;
  EmbedTrace trace;
};

/// Embeds a tight tree with the given trunk into any host strictly above
/// ((t-1)/r + a(r,c)) * |shadow|, following the weight / rainbow / pattern /
/// cleaning / greedy-extension pipeline. Throws BelowThreshold when the host
/// is not dense enough.
BoundedTrunkEmbedding embed_bounded_trunk(const Hypergraph& host, const Hypergraph& tree, const TrunkCert& trunk);

// ----------------------------------------------------------- small trees

/// Embeds a tight tree with at most four edges into any host with
/// e > (t-1)/r * |shadow|, recursing through vertex links down to graphs.
Embedding embed_small_tree(const Hypergraph& host, const Hypergraph& tree);

}  // namespace tightturan
