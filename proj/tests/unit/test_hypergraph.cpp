#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tightturan/constructions.hpp"
#include "tightturan/error.hpp"
#include "tightturan/hypergraph.hpp"

namespace tightturan {
namespace {

using fixtures::single_triple;
using fixtures::tight_path_p43;

TEST(VertexSet, SortsAndRejectsRepeats) {
  VertexSet s(std::vector<Vertex>{4, 1, 3});
  EXPECT_EQ(s.items(), (std::vector<Vertex>{1, 3, 4}));
  EXPECT_THROW(VertexSet(std::vector<Vertex>{1, 2, 1}), Error);
}

TEST(VertexSet, SetOperations) {
  VertexSet a{0, 1, 2}, b{1, 2, 3};
  EXPECT_EQ(a.intersection_size(b), 2u);
  EXPECT_EQ(a.set_union(b), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(a.set_difference(b), (VertexSet{0}));
  EXPECT_EQ(a.without(1), (VertexSet{0, 2}));
  EXPECT_EQ(a.with(7), (VertexSet{0, 1, 2, 7}));
  EXPECT_TRUE((VertexSet{1, 2}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
}

TEST(VertexSet, SubsetsInLexOrder) {
  auto subs = subsets_of_size(VertexSet{0, 1, 2, 3}, 2);
  ASSERT_EQ(subs.size(), 6u);
  EXPECT_EQ(subs.front(), (VertexSet{0, 1}));
  EXPECT_EQ(subs[1], (VertexSet{0, 2}));
  EXPECT_EQ(subs.back(), (VertexSet{2, 3}));
}

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(3, 4, {VertexSet{0, 1}}), Error);
  EXPECT_THROW(Hypergraph(3, 4, {VertexSet{0, 1, 4}}), Error);
  EXPECT_THROW(Hypergraph(3, 4, {VertexSet{0, 1, 2}, VertexSet{2, 1, 0}}), Error);
}

TEST(Hypergraph, EdgesAreCanonicallySorted) {
  Hypergraph g(2, 4, {VertexSet{2, 3}, VertexSet{0, 3}, VertexSet{0, 1}});
  EXPECT_EQ(g.edge(0), (VertexSet{0, 1}));
  EXPECT_EQ(g.edge(1), (VertexSet{0, 3}));
  EXPECT_EQ(g.edge(2), (VertexSet{2, 3}));
  EXPECT_TRUE(g.contains_edge(VertexSet{0, 3}));
  EXPECT_FALSE(g.contains_edge(VertexSet{1, 3}));
  EXPECT_EQ(g.index_of(VertexSet{2, 3}), 2u);
  EXPECT_EQ(g.index_of(VertexSet{1, 3}), 3u);
}

TEST(Shadow, CompleteFiveThreeCoversAllPairs) { EXPECT_EQ(shadow(complete_hypergraph(5, 3)).size(), 10u); }

TEST(Shadow, TightPathHasNinePairs) { EXPECT_EQ(shadow(tight_path_p43()).size(), 9u); }

TEST(Shadow, SingleEdge) {
  auto s = shadow(single_triple());
  EXPECT_EQ(s, (std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 2}}));
}

TEST(Shadow, EmptyHypergraph) { EXPECT_TRUE(shadow(Hypergraph(3, 5)).empty()); }

TEST(Link, VertexLinkInCompleteFourThreeIsTriangle) {
  Hypergraph l = link(complete_hypergraph(4, 3), VertexSet{0});
  EXPECT_EQ(l.uniformity(), 2u);
  EXPECT_EQ(l.vertex_count(), 4u);
  EXPECT_EQ(l, Hypergraph(2, 4, {VertexSet{1, 2}, VertexSet{1, 3}, VertexSet{2, 3}}));
}

TEST(Link, PairLinkInTightPath) {
  Hypergraph l = link(tight_path_p43(), VertexSet{0, 1});
  EXPECT_EQ(l, Hypergraph(1, 6, {VertexSet{2}}));
}

TEST(Link, IsolatedVertexHasEmptyLink) {
  Hypergraph g = tight_path_p43().with_vertex_count(10);
  EXPECT_TRUE(link(g, VertexSet{9}).empty());
}

TEST(Link, RejectsFullSizeSet) { EXPECT_THROW(link(tight_path_p43(), VertexSet{0, 1, 2}), Error); }

TEST(Degree, Examples) {
  EXPECT_EQ(degree(complete_hypergraph(5, 3), VertexSet{0, 1}), 3u);
  EXPECT_EQ(degree(tight_path_p43(), VertexSet{2, 3}), 2u);
  EXPECT_EQ(degree(tight_path_p43(), VertexSet{}), 4u);
  EXPECT_EQ(degree(tight_path_p43(), VertexSet{0, 5}), 0u);
}

TEST(MinPDegree, Examples) {
  EXPECT_EQ(min_p_degree(complete_hypergraph(5, 3), 2), 3u);
  EXPECT_EQ(min_p_degree(tight_path_p43(), 2), 1u);
  EXPECT_EQ(min_p_degree(tight_path_p43(), 1), 1u);
}

TEST(MinPDegree, IgnoresSetsOutsideEveryEdge) {
  // pair {0,5} has degree 0 but lies in no edge
  EXPECT_EQ(min_p_degree(complete_hypergraph(4, 3).with_vertex_count(6), 2), 2u);
}

TEST(MinPDegree, ErrorsOnEmptyOrBadP) {
  EXPECT_THROW(min_p_degree(Hypergraph(3, 4), 2), Error);
  EXPECT_THROW(min_p_degree(tight_path_p43(), 0), Error);
  EXPECT_THROW(min_p_degree(tight_path_p43(), 3), Error);
}

TEST(CodegreeIndex, MatchesDegree) {
  Hypergraph g = tight_path_p43();
  CodegreeIndex index(g);
  EXPECT_EQ(index.shadow_size(), 9u);
  for (const auto& d : shadow(g)) EXPECT_EQ(index.codegree(d), degree(g, d));
  EXPECT_EQ(index.codegree(VertexSet{0, 5}), 0u);
  auto nb = index.co_neighbors(VertexSet{2, 3});
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 4}));
}

TEST(HypergraphProperty, LinkDegreeConsistency) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned r = 2 + trial % 3;
    const std::size_t n = r + 1 + trial % 5;
    Hypergraph g = oracle::random_hypergraph(r, n, 0.5, rng);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      for (const auto& d : subsets_of_size(VertexSet(all), k)) {
        ASSERT_EQ(degree(g, d), link(g, d).edge_count());
      }
    }
  }
}

TEST(HypergraphProperty, RemovingAnEdgeNeverGrowsShadow) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned r = 2 + trial % 3;
    Hypergraph g = oracle::random_hypergraph(r, r + 3, 0.6, rng);
    const auto full = shadow(g);
    for (const auto& e : g.edges()) {
      auto smaller = shadow(g.without_edge(e));
      EXPECT_LE(smaller.size(), full.size());
      EXPECT_TRUE(std::includes(full.begin(), full.end(), smaller.begin(), smaller.end()));
    }
  }
}

}  // namespace
}  // namespace tightturan
