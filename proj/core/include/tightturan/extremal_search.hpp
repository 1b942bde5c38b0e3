#pragma once

#include <cstdint>
#include <optional>

#include "tightturan/embedding.hpp"
#include "tightturan/hypergraph.hpp"
#include "tightturan/rational.hpp"

namespace tightturan {

struct SearchOptions {
  /// Node limit across the whole search. Shares are split evenly between
  /// subproblems so the outcome never depends on `threads`.
  std::uint64_t budget = 50'000'000;
  unsigned threads = 1;
  /// Skips edges that a vertex transposition fixing the current state maps
  /// onto an already excluded edge. Changes node counts only.
  bool orbit_pruning = true;
};

struct SearchResult {
  std::size_t max_edges = 0;
  Hypergraph witness{1, 0};
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

struct RatioResult {
  Rational best_ratio;
  Hypergraph witness{1, 0};
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

/// Largest forbidden-free host on n vertices: ex_r(n, forbidden). Uses
/// branch and bound over the edges of K_n^r in lexicographic order; the
/// witness is the first optimum met in include-first order. Throws
/// Unsupported when C(n, r) > 64.
SearchResult turan_exact(std::size_t n, const Hypergraph& forbidden, const SearchOptions& options = {});

/// Maximum of e(G)/|shadow(G)| over non-empty forbidden-free G on n vertices.
RatioResult beta_exact(std::size_t n, const Hypergraph& forbidden, const SearchOptions& options = {});

struct KalaiReport {
  SearchResult search;
  Rational bound;  // (t-1)/r * C(n, r-1)
  Rational slack;  // bound - max_edges
  bool pass = false;
};

KalaiReport verify_kalai(std::size_t n, const Hypergraph& tree, const SearchOptions& options = {});

struct ShadowBoundReport {
  bool forbidden_free = false;
  std::optional<Embedding> copy;
  std::size_t edges = 0;
  std::size_t shadow_size = 0;
  Rational coefficient;
  Rational bound;  // coefficient * |shadow|
  /// Only meaningful when forbidden_free; otherwise the inequality was not tested.
  bool inequality_holds = false;
  bool pass = false;
};

ShadowBoundReport verify_shadow_bound(const Hypergraph& host, const Hypergraph& forbidden, const Rational& coefficient);

}  // namespace tightturan
