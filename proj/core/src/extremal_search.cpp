#include "tightturan/extremal_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "tightturan/constructions.hpp"

namespace tightturan {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kSplitDepth = 6;
constexpr std::size_t kBatchSize = 8;

Mask bit(std::size_t i) { return Mask{1} << i; }

/// Edges of K_n^r, the copies of the forbidden graph as edge masks, and the
/// vertex transpositions acting on edge indices.
struct Universe {
  unsigned r = 0;
  std::size_t n = 0;
  std::vector<VertexSet> edges;
  Mask full = 0;
  std::vector<Mask> copies;
  std::vector<std::vector<std::uint32_t>> copies_through;
  std::vector<std::vector<std::uint8_t>> transpositions;
  std::vector<std::vector<std::uint16_t>> shadow_ids;
  std::size_t shadow_universe = 0;

  Universe(std::size_t vertex_count, const Hypergraph& forbidden) : r(forbidden.uniformity()), n(vertex_count) {
    if (forbidden.empty()) throw Error(ErrorCode::InvalidArgument, "forbidden hypergraph has no edges");
    if (n >= r && binomial(static_cast<unsigned>(n), r) > 64) {
      throw Error(ErrorCode::Unsupported, "exact search supports at most 64 candidate edges (C(n, r) <= 64)");
    }
    if (n >= r) {
      Hypergraph complete = complete_hypergraph(n, r);
      edges.assign(complete.edges().begin(), complete.edges().end());
    }
    const std::size_t m = edges.size();
    full = m == 64 ? ~Mask{0} : bit(m) - 1;

    std::unordered_map<VertexSet, std::uint8_t, VertexSetHash> rank;
    for (std::size_t i = 0; i < m; ++i) rank.emplace(edges[i], static_cast<std::uint8_t>(i));

    if (m > 0 && forbidden.non_isolated_vertices().size() <= n) {
      Hypergraph host(r, n, edges);
      Hypergraph pattern = forbidden;
      for_each_embedding(pattern, host, [&](const Embedding& f) {
        Mask c = 0;
        for (const auto& e : pattern.edges()) c |= bit(rank.at(f.map(e)));
        copies.push_back(c);
        return true;
      });
      std::sort(copies.begin(), copies.end());
      copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    }
    copies_through.resize(m);
    for (std::size_t c = 0; c < copies.size(); ++c) {
      for (Mask rest = copies[c]; rest; rest &= rest - 1) {
        copies_through[std::countr_zero(rest)].push_back(static_cast<std::uint32_t>(c));
      }
    }

    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        std::vector<std::uint8_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) {
          std::vector<Vertex> img;
          for (Vertex x : edges[i]) img.push_back(x == u ? v : x == v ? u : x);
          perm[i] = rank.at(VertexSet(std::move(img)));
        }
        transpositions.push_back(std::move(perm));
      }
    }

    std::unordered_map<VertexSet, std::uint16_t, VertexSetHash> shadow_rank;
    shadow_ids.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (Vertex x : edges[i]) {
        auto [it, fresh] = shadow_rank.emplace(edges[i].without(x), static_cast<std::uint16_t>(shadow_rank.size()));
        shadow_ids[i].push_back(it->second);
      }
    }
    shadow_universe = shadow_rank.size();
  }

  Mask apply(const std::vector<std::uint8_t>& perm, Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= bit(perm[std::countr_zero(s)]);
    return out;
  }

  std::size_t shadow_size(Mask s) const {
    std::vector<bool> seen(shadow_universe, false);
    std::size_t count = 0;
    for (; s; s &= s - 1) {
      for (auto id : shadow_ids[std::countr_zero(s)]) {
        if (!seen[id]) {
          seen[id] = true;
          ++count;
        }
      }
    }
    return count;
  }

  Hypergraph graph_of(Mask s) const {
    std::vector<VertexSet> picked;
    for (; s; s &= s - 1) picked.push_back(edges[std::countr_zero(s)]);
    return Hypergraph(r, n, std::move(picked));
  }
};

/// Objective value num/den; den == 0 encodes "no solution yet".
struct Value {
  std::int64_t num = 0;
  std::int64_t den = 0;

  bool valid() const { return den != 0; }
  friend bool operator<(const Value& a, const Value& b) {
    if (!b.valid()) return false;
    if (!a.valid()) return true;
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
};

enum class Objective { EdgeCount, ShadowRatio };

struct Node {
  Mask included = 0;
  Mask excluded = 0;
  std::size_t pos = 0;
};

struct Outcome {
  Value best;
  Mask witness = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool improved = false;
};

class BranchAndBound {
 public:
  BranchAndBound(const Universe& u, Objective objective, bool orbit_pruning)
      : u_(u), objective_(objective), orbit_pruning_(orbit_pruning) {
    ratio_cap_ = Value{static_cast<std::int64_t>(u.n) - u.r + 1, u.r};
  }

  /// Solves one subtree. Only solutions strictly better than `floor` count.
  Outcome solve(const Node& root, Value floor, std::uint64_t budget) const {
    Run run{floor, budget, {}};
    run.out.best = floor;
    dfs(run, root);
    run.out.improved = floor < run.out.best;
    return run.out;
  }

  /// Expands the first `depth` branching levels; frontier nodes come out in DFS order.
  std::vector<Node> split(const Node& root, std::size_t depth, std::uint64_t& nodes) const {
    std::vector<Node> frontier;
    expand(root, depth, frontier, nodes);
    return frontier;
  }

  /// The include-first dive: the first leaf of the tree.
  Outcome dive() const {
    Node node;
    Outcome out;
    while (true) {
      ++out.nodes;
      node.pos = next_undecided(node);
      if (node.pos == u_.edges.size()) break;
      if (auto inc = include(node)) {
        node = *inc;
      } else {
        node = exclude(node);
      }
    }
    out.best = value(node.included);
    out.witness = node.included;
    return out;
  }

  Value value(Mask included) const {
    auto edges = static_cast<std::int64_t>(std::popcount(included));
    if (objective_ == Objective::EdgeCount) return {edges, 1};
    if (included == 0) return {};
    return {edges, static_cast<std::int64_t>(u_.shadow_size(included))};
  }

 private:
  struct Run {
    Value floor;
    std::uint64_t budget;
    Outcome out;
  };

  std::size_t next_undecided(const Node& node) const {
    std::size_t pos = node.pos;
    const Mask decided = node.included | node.excluded;
    while (pos < u_.edges.size() && (decided & bit(pos))) ++pos;
    return pos;
  }

  /// Includes edge node.pos and excludes every edge that would now close a copy.
  std::optional<Node> include(const Node& node) const {
    Node child = node;
    child.included |= bit(node.pos);
    for (auto c : u_.copies_through[node.pos]) {
      const Mask copy = u_.copies[c];
      if (copy & node.excluded) continue;
      const Mask rest = copy & ~child.included;
      if (rest == 0) return std::nullopt;
      if ((rest & (rest - 1)) == 0) child.excluded |= rest;
    }
    child.pos = node.pos + 1;
    return child;
  }

  Node exclude(const Node& node) const {
    Node child = node;
    child.excluded |= bit(node.pos);
    if (orbit_pruning_) {
      std::vector<const std::vector<std::uint8_t>*> stabilizer;
      for (const auto& perm : u_.transpositions) {
        if (u_.apply(perm, node.included) == node.included && u_.apply(perm, node.excluded) == node.excluded) {
          stabilizer.push_back(&perm);
        }
      }
      const Mask undecided = u_.full & ~(node.included | node.excluded);
      Mask orbit = bit(node.pos);
      Mask frontier = orbit;
      while (frontier) {
        Mask next = 0;
        for (; frontier; frontier &= frontier - 1) {
          std::size_t e = std::countr_zero(frontier);
          for (auto* perm : stabilizer) {
            Mask img = bit((*perm)[e]);
            if ((img & undecided) && !(img & orbit)) next |= img;
          }
        }
        orbit |= next;
        frontier = next;
      }
      child.excluded |= orbit;
    }
    child.pos = node.pos + 1;
    return child;
  }

  Value upper_bound(const Node& node) const {
    const Mask undecided = u_.full & ~(node.included | node.excluded);
    auto optimistic = static_cast<std::int64_t>(std::popcount(node.included) + std::popcount(undecided));
    // every live copy needs one more exclusion; copies with disjoint
    // undecided parts need distinct ones
    Mask claimed = 0;
    for (const Mask copy : u_.copies) {
      if (copy & node.excluded) continue;
      const Mask need = copy & undecided;
      if (need == 0 || (need & claimed)) continue;
      claimed |= need;
      --optimistic;
    }
    if (objective_ == Objective::EdgeCount) return {optimistic, 1};
    auto shadow = static_cast<std::int64_t>(std::max<std::size_t>(u_.shadow_size(node.included), u_.r));
    Value bound{optimistic, shadow};
    return bound < ratio_cap_ ? bound : ratio_cap_;
  }

  bool cheap_prune(const Node& node, const Value& best) const {
    if (objective_ != Objective::EdgeCount) return false;
    const Mask undecided = u_.full & ~(node.included | node.excluded);
    Value optimistic{static_cast<std::int64_t>(std::popcount(node.included) + std::popcount(undecided)), 1};
    return optimistic <= best;
  }

  void dfs(Run& run, Node node) const {
    if (run.out.aborted) return;
    if (++run.out.nodes > run.budget) {
      run.out.aborted = true;
      return;
    }
    node.pos = next_undecided(node);
    if (node.pos == u_.edges.size()) {
      Value v = value(node.included);
      if (run.out.best < v) {
        run.out.best = v;
        run.out.witness = node.included;
      }
      return;
    }
    if (run.out.best.valid() && (cheap_prune(node, run.out.best) || upper_bound(node) <= run.out.best)) return;
    if (auto inc = include(node)) dfs(run, *inc);
    dfs(run, exclude(node));
  }

  void expand(Node node, std::size_t depth, std::vector<Node>& frontier, std::uint64_t& nodes) const {
    node.pos = next_undecided(node);
    if (depth == 0 || node.pos == u_.edges.size()) {
      frontier.push_back(node);
      return;
    }
    ++nodes;
    if (auto inc = include(node)) expand(*inc, depth - 1, frontier, nodes);
    expand(exclude(node), depth - 1, frontier, nodes);
  }

  const Universe& u_;
  Objective objective_;
  bool orbit_pruning_;
  Value ratio_cap_;
};

struct Solved {
  Value best;
  Mask witness = 0;
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

Solved run_search(const Universe& u, Objective objective, const SearchOptions& options) {
  BranchAndBound engine(u, objective, options.orbit_pruning);
  Solved result;

  Outcome dive = engine.dive();
  result.nodes += dive.nodes;
  result.best = dive.best;
  result.witness = dive.witness;

  std::vector<Node> subproblems = engine.split(Node{}, kSplitDepth, result.nodes);
  const std::uint64_t remaining = options.budget > result.nodes ? options.budget - result.nodes : 0;
  const std::uint64_t share = std::max<std::uint64_t>(1, remaining / subproblems.size());

  // The dive leaf is the first leaf of subproblem 0, so it is a valid floor
  // for every later subproblem. Batches see only earlier batches' results,
  // which keeps the outcome independent of the thread count.
  Value global_best = dive.best;
  Mask global_witness = dive.witness;
  std::vector<Outcome> outcomes(subproblems.size());
  const unsigned workers = std::max(1u, options.threads);

  for (std::size_t start = 0; start < subproblems.size(); start += kBatchSize) {
    const std::size_t stop = std::min(subproblems.size(), start + kBatchSize);
    const Value floor = global_best;
    auto work = [&](std::size_t i) {
      outcomes[i] = engine.solve(subproblems[i], i == 0 ? Value{} : floor, share);
    };
    if (workers == 1) {
      for (std::size_t i = start; i < stop; ++i) work(i);
    } else {
      std::atomic<std::size_t> next{start};
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, stop - start); ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < stop; i = next++) work(i);
        });
      }
    }
    for (std::size_t i = start; i < stop; ++i) {
      result.nodes += outcomes[i].nodes;
      if (outcomes[i].aborted) result.exhaustive = false;
      // subproblem 0 holds the dive leaf, so its own first optimum wins ties
      const bool take = i == 0 ? outcomes[i].improved && !(outcomes[i].best < global_best)
                               : outcomes[i].improved && global_best < outcomes[i].best;
      if (take) {
        global_best = outcomes[i].best;
        global_witness = outcomes[i].witness;
      }
    }
  }
  result.best = global_best;
  result.witness = global_witness;
  return result;
}

}  // namespace

SearchResult turan_exact(std::size_t n, const Hypergraph& forbidden, const SearchOptions& options) {
  Universe u(n, forbidden);
  Solved solved = run_search(u, Objective::EdgeCount, options);
  SearchResult out;
  out.max_edges = static_cast<std::size_t>(solved.best.num);
  out.witness = u.graph_of(solved.witness);
  out.nodes_explored = solved.nodes;
  out.exhaustive = solved.exhaustive;
  return out;
}

RatioResult beta_exact(std::size_t n, const Hypergraph& forbidden, const SearchOptions& options) {
  Universe u(n, forbidden);
  Solved solved = run_search(u, Objective::ShadowRatio, options);
  RatioResult out;
  if (!solved.best.valid()) {
    throw Error(ErrorCode::PreconditionFailed, "every non-empty host on n vertices contains the forbidden graph");
  }
  out.best_ratio = Rational(BigInt(solved.best.num), BigInt(solved.best.den));
  out.witness = u.graph_of(solved.witness);
  out.nodes_explored = solved.nodes;
  out.exhaustive = solved.exhaustive;
  return out;
}

KalaiReport verify_kalai(std::size_t n, const Hypergraph& tree, const SearchOptions& options) {
  KalaiReport out;
  out.search = turan_exact(n, tree, options);
  const unsigned r = tree.uniformity();
  out.bound = Rational(BigInt(tree.edge_count()) - 1, BigInt(r)) * Rational(binomial(static_cast<unsigned>(n), r - 1));
  out.slack = out.bound - Rational(out.search.max_edges);
  out.pass = out.slack >= 0;
  return out;
}

ShadowBoundReport verify_shadow_bound(const Hypergraph& host, const Hypergraph& forbidden, const Rational& coefficient) {
  ShadowBoundReport out;
  out.copy = find_embedding(forbidden, host);
  out.forbidden_free = !out.copy;
  out.edges = host.edge_count();
  out.shadow_size = shadow(host).size();
  out.coefficient = coefficient;
  out.bound = coefficient * Rational(out.shadow_size);
  out.inequality_holds = Rational(out.edges) <= out.bound;
  out.pass = out.forbidden_free && out.inequality_holds;
  return out;
}

}  // namespace tightturan
