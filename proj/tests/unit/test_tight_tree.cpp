#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tightturan/hypergraph_io.hpp"
#include "tightturan/tight_tree.hpp"

namespace tightturan {
namespace {

using fixtures::single_triple;
using fixtures::star_012_013_014;
using fixtures::tight_path_p43;

TEST(TightOrder, TightPathCertificate) {
  auto cert = tight_order(tight_path_p43());
  ASSERT_TRUE(cert);
  EXPECT_TRUE(is_valid_tight_order(tight_path_p43(), *cert));
  EXPECT_EQ(cert->edge_order,
            (std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}}));
  EXPECT_EQ(cert->new_vertex, (std::vector<std::optional<Vertex>>{std::nullopt, 3, 4, 5}));
  EXPECT_EQ(cert->host_index, (std::vector<std::optional<std::size_t>>{std::nullopt, 0, 1, 2}));
}

TEST(TightOrder, RejectsDisjointAndLooseEdges) {
  EXPECT_FALSE(tight_order(Hypergraph(3, 6, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}})));
  EXPECT_FALSE(tight_order(Hypergraph(3, 5, {VertexSet{0, 1, 2}, VertexSet{2, 3, 4}})));
}

TEST(TightOrder, EmptyTreeIsAnError) { EXPECT_THROW(tight_order(Hypergraph(3, 3)), Error); }

TEST(TightOrder, NeedsBacktrackingWhenFirstEdgeIsALeaf) {
  // listing order starts with 013, whose only extension path goes through 012
  Hypergraph g(3, 6, {VertexSet{0, 1, 3}, VertexSet{0, 1, 2}, VertexSet{1, 2, 4}, VertexSet{2, 4, 5}});
  auto cert = tight_order(g);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(is_valid_tight_order(g, *cert));
}

TEST(TightOrder, CheckerRejectsTamperedCertificates) {
  auto cert = *tight_order(tight_path_p43());
  auto bad_host = cert;
  bad_host.host_index[3] = 0;
  EXPECT_FALSE(is_valid_tight_order(tight_path_p43(), bad_host));
  auto bad_vertex = cert;
  bad_vertex.new_vertex[2] = 2;
  EXPECT_FALSE(is_valid_tight_order(tight_path_p43(), bad_vertex));
  auto missing = cert;
  missing.edge_order.pop_back();
  missing.new_vertex.pop_back();
  missing.host_index.pop_back();
  EXPECT_FALSE(is_valid_tight_order(tight_path_p43(), missing));
}

std::set<VertexSet> classes_of(const RPartition& p) {
  auto c = p.color_classes();
  return {c.begin(), c.end()};
}

TEST(RPartition, TightPathClasses) {
  auto cert = *tight_order(tight_path_p43());
  RPartition p = r_partition(tight_path_p43(), cert);
  EXPECT_EQ(classes_of(p), (std::set<VertexSet>{VertexSet{0, 3}, VertexSet{1, 4}, VertexSet{2, 5}}));
  EXPECT_TRUE(p.is_proper_for(tight_path_p43()));
}

TEST(RPartition, SingleEdgeAndStar) {
  EXPECT_EQ(classes_of(r_partition(single_triple(), *tight_order(single_triple()))),
            (std::set<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}}));
  EXPECT_EQ(classes_of(r_partition(star_012_013_014(), *tight_order(star_012_013_014()))),
            (std::set<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2, 3, 4}}));
}

TEST(RPartition, InvalidCertificateIsAnError) {
  auto cert = *tight_order(tight_path_p43());
  cert.host_index[3] = 0;
  EXPECT_THROW(r_partition(tight_path_p43(), cert), Error);
}

/// All certificates of `tree` obtainable from edge permutations, built straight from the definition.
std::vector<TightTreeCert> all_certificates(const Hypergraph& tree) {
  std::vector<TightTreeCert> out;
  std::vector<std::size_t> idx(tree.edge_count());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    TightTreeCert cert;
    VertexSet seen;
    bool ok = true;
    for (std::size_t p = 0; p < idx.size() && ok; ++p) {
      const VertexSet& e = tree.edge(idx[p]);
      cert.edge_order.push_back(e);
      if (p == 0) {
        cert.new_vertex.push_back(std::nullopt);
        cert.host_index.push_back(std::nullopt);
        seen = e;
        continue;
      }
      VertexSet fresh = e.set_difference(seen);
      if (fresh.size() != 1) {
        ok = false;
        break;
      }
      std::optional<std::size_t> host;
      for (std::size_t q = 0; q < p && !host; ++q) {
        if (e.without(fresh[0]).is_subset_of(cert.edge_order[q])) host = q;
      }
      if (!host) ok = false;
      cert.new_vertex.push_back(fresh[0]);
      cert.host_index.push_back(host);
      seen = seen.with(fresh[0]);
    }
    if (ok) out.push_back(std::move(cert));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

TEST(TightTreeProperty, EveryCertificateGivesTheSamePartition) {
  for (std::size_t t = 1; t <= 5; ++t) {
    for (const auto& tree : enumerate_tight_trees(3, t)) {
      auto certs = all_certificates(tree);
      ASSERT_FALSE(certs.empty());
      auto reference = classes_of(r_partition(tree, certs.front()));
      for (const auto& cert : certs) {
        ASSERT_TRUE(is_valid_tight_order(tree, cert));
        RPartition p = r_partition(tree, cert);
        EXPECT_TRUE(p.is_proper_for(tree));
        EXPECT_EQ(classes_of(p), reference);
      }
    }
  }
}

TEST(TightTreeProperty, VertexCountIsRPlusTMinusOne) {
  for (unsigned r = 2; r <= 4; ++r) {
    for (std::size_t t = 1; t <= 5; ++t) {
      if (r + t - 1 > 8) continue;
      for (const auto& tree : enumerate_tight_trees(r, t)) {
        EXPECT_EQ(tree.non_isolated_vertices().size(), r + t - 1);
        auto cert = tight_order(tree);
        ASSERT_TRUE(cert);
        EXPECT_TRUE(is_valid_tight_order(tree, *cert));
      }
    }
  }
}

TEST(Enumerate, KnownCounts) {
  EXPECT_EQ(enumerate_tight_trees(3, 1).size(), 1u);
  EXPECT_EQ(enumerate_tight_trees(3, 2).size(), 1u);
  EXPECT_EQ(enumerate_tight_trees(2, 4).size(), 3u);
  EXPECT_EQ(enumerate_tight_trees(3, 3).size(), 2u);
}

TEST(Enumerate, MatchesBruteForceClassCount) {
  EXPECT_EQ(enumerate_tight_trees(3, 3).size(), oracle::count_tight_trees(3, 3));
  EXPECT_EQ(enumerate_tight_trees(2, 4).size(), oracle::count_tight_trees(2, 4));
  EXPECT_EQ(enumerate_tight_trees(2, 5).size(), oracle::count_tight_trees(2, 5));
  EXPECT_EQ(enumerate_tight_trees(3, 4).size(), oracle::count_tight_trees(3, 4));
  EXPECT_EQ(enumerate_tight_trees(4, 3).size(), oracle::count_tight_trees(4, 3));
}

TEST(Enumerate, FrozenCounts) {
  // regression constants; the brute-force test above pins the small ones
  EXPECT_EQ(enumerate_tight_trees(3, 4).size(), 5u);
  EXPECT_EQ(enumerate_tight_trees(2, 5).size(), 6u);
}

TEST(Enumerate, OutputIsPairwiseNonIsomorphicAndClosed) {
  for (std::size_t t = 2; t <= 4; ++t) {
    auto trees = enumerate_tight_trees(3, t);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) EXPECT_FALSE(are_isomorphic(trees[i], trees[j]));
    }
    // raw one-edge extensions of the previous level all land in some class
    for (const auto& base : enumerate_tight_trees(3, t - 1)) {
      const auto fresh = static_cast<Vertex>(3 + t - 2);
      for (const auto& host : base.edges()) {
        for (Vertex drop : host) {
          Hypergraph grown = base.with_vertex_count(3 + t - 1).with_edge(host.without(drop).with(fresh));
          bool found = std::any_of(trees.begin(), trees.end(), [&](const Hypergraph& h) { return are_isomorphic(h, grown); });
          EXPECT_TRUE(found) << format_hypergraph(grown);
        }
      }
    }
  }
}

TEST(Enumerate, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_tight_trees(1, 3), Error);
  EXPECT_THROW(enumerate_tight_trees(3, 0), Error);
  EXPECT_THROW(enumerate_tight_trees(6, 8), Error);
}

TEST(Isomorphism, Examples) {
  Hypergraph a(3, 6, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}});
  Hypergraph b(3, 6, {VertexSet{2, 3, 4}, VertexSet{3, 4, 5}});
  EXPECT_TRUE(are_isomorphic(a, b));
  Hypergraph path3(3, 5, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}});
  Hypergraph star3(3, 5, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{1, 2, 4}});
  EXPECT_FALSE(are_isomorphic(path3, star3));
  EXPECT_TRUE(are_isomorphic(path3, path3));
  EXPECT_FALSE(are_isomorphic(a, Hypergraph(2, 6, {VertexSet{0, 1}, VertexSet{1, 2}})));
}

TEST(Isomorphism, AgreesWithCanonicalForms) {
  auto trees = enumerate_tight_trees(3, 4);
  std::mt19937_64 rng(5);
  for (const auto& tree : trees) {
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> relabelled;
    for (const auto& e : tree.edges()) {
      std::vector<Vertex> x;
      for (Vertex v : e) x.push_back(perm[v]);
      relabelled.emplace_back(std::move(x));
    }
    Hypergraph copy(3, 6, relabelled);
    for (const auto& other : trees) {
      const bool same_form = oracle::canonical_form(oracle::edges_of(copy), 6) ==
                             oracle::canonical_form(oracle::edges_of(other), 6);
      EXPECT_EQ(are_isomorphic(copy, other), same_form);
    }
  }
}

TEST(Trunk, StarShapedHasTrunkOne) {
  TrunkNumber tn = trunk_number(star_012_013_014());
  EXPECT_EQ(tn.c, 1u);
  EXPECT_TRUE(is_valid_trunk(star_012_013_014(), tn.cert));
  EXPECT_EQ(tn.cert.trunk_edges(), (std::vector<VertexSet>{VertexSet{0, 1, 2}}));
}

TEST(Trunk, TightPathHasTrunkTwo) {
  TrunkNumber tn = trunk_number(tight_path_p43());
  EXPECT_EQ(tn.c, 2u);
  EXPECT_EQ(tn.cert.trunk_edges(), (std::vector<VertexSet>{VertexSet{1, 2, 3}, VertexSet{2, 3, 4}}));
  EXPECT_TRUE(is_valid_trunk(tight_path_p43(), tn.cert));
}

TEST(Trunk, SingleEdge) { EXPECT_EQ(trunk_number(single_triple()).c, 1u); }

TEST(Trunk, NotATightTree) {
  Hypergraph loose(3, 5, {VertexSet{0, 1, 2}, VertexSet{2, 3, 4}});
  EXPECT_THROW(trunk_number(loose), Error);
  EXPECT_THROW(is_star_shaped(loose), Error);
}

TEST(Trunk, CertifyRejectsNonTrunks) {
  // 012 alone: 345 does not meet it in two vertices
  EXPECT_FALSE(certify_trunk(tight_path_p43(), {0}));
  // 012 and 345 are not a tight subtree
  EXPECT_FALSE(certify_trunk(tight_path_p43(), {0, 3}));
  EXPECT_TRUE(certify_trunk(tight_path_p43(), {1, 2}));
}

TEST(Trunk, MatchesNaiveOracleOnEnumeratedTrees) {
  for (unsigned r : {2u, 3u}) {
    for (std::size_t t = 1; t <= 5; ++t) {
      for (const auto& tree : enumerate_tight_trees(r, t)) {
        TrunkNumber tn = trunk_number(tree);
        EXPECT_TRUE(is_valid_trunk(tree, tn.cert));
        EXPECT_EQ(tn.c, oracle::naive_trunk_number(tree)) << format_hypergraph(tree);
        EXPECT_EQ(is_star_shaped(tree), tn.c == 1) << format_hypergraph(tree);
      }
    }
  }
}

TEST(StarShaped, Examples) {
  EXPECT_TRUE(is_star_shaped(Hypergraph(3, 5, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{0, 1, 4}})));
  // 012, 123, 013 span only four vertices, so they are not a tight tree
  EXPECT_THROW(is_star_shaped(Hypergraph(3, 4, {VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{0, 1, 3}})), Error);
  EXPECT_FALSE(is_star_shaped(tight_path_p43()));
  EXPECT_TRUE(is_star_shaped(single_triple()));
}

}  // namespace
}  // namespace tightturan
