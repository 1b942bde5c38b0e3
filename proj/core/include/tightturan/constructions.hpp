#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightturan/hypergraph.hpp"

namespace tightturan {

/// All C(n, r) r-subsets of {0..n-1}. Throws InvalidArgument when n < r or r < 1.
Hypergraph complete_hypergraph(std::size_t n, unsigned r);

/// All r-sets containing vertex 0 (an intersecting family).
Hypergraph ekr_family(std::size_t n, unsigned r);

/// A tournament on vertices {0..k-1}; arc (i, j) means i -> j.
struct Tournament {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  /// True when every unordered pair carries exactly one arc and there are no loops.
  bool is_valid() const;
  std::vector<std::size_t> out_degrees() const;
  /// Vertices with out-degree zero.
  std::vector<std::size_t> sinks() const;
};

/// The rotational tournament i -> i+1, ..., i+(k-1)/2 (mod k). Regular for
/// odd k; for even k the remaining antipodal pairs point from the smaller index.
Tournament cyclic_tournament(std::size_t k);

/// Text form: first the vertex count, then one "i j" arc per line; `#` starts
/// a comment. Throws ParseError naming line and column; validity is not checked.
Tournament parse_tournament(std::string_view text);
Tournament read_tournament(const std::filesystem::path& path);
std::string format_tournament(const Tournament& d);

/// Triples with two vertices in V_i and one in V_j for an arc i -> j, where
/// V_k = {3k, 3k+1, 3k+2}. Throws InvalidArgument unless 3 | n and `d` is a
/// valid tournament on n/3 vertices.
Hypergraph tournament_family(std::size_t n, const Tournament& d);

/// n/t disjoint copies of K_t (r = 2). Throws InvalidArgument unless t >= 1 and t | n.
Hypergraph disjoint_cliques(std::size_t n, std::size_t t);

struct PackingResult {
  std::vector<VertexSet> vertex_sets;
  Hypergraph union_graph{1, 0};
  std::size_t m = 0;
  std::uint64_t candidates_examined = 0;
};

/// Greedy first-fit packing of copies of `g` on n vertices. A candidate
/// vertex set is accepted when it meets every accepted set in fewer than
/// r-1 vertices, or in exactly r-1 vertices forming no shadow element of
/// either copy; the copies' shadows are then pairwise disjoint. Candidates
/// default to all |V(g)|-subsets of {0..n-1} in lexicographic order;
/// `budget` caps how many are examined.
PackingResult shadow_disjoint_packing(const Hypergraph& g, std::size_t n, std::uint64_t budget = 10'000'000,
                                      const std::optional<std::vector<VertexSet>>& candidates = std::nullopt);

/// Rows then columns of a k x k grid on {0..k^2-1}; cell (i, j) is i*k + j.
std::vector<VertexSet> grid_candidates(std::size_t k);

}  // namespace tightturan
