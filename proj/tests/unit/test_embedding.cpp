#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tightturan/constructions.hpp"
#include "tightturan/embedding.hpp"
#include "tightturan/hypergraph_io.hpp"

namespace tightturan {
namespace {

using fixtures::tight_path_p43;

/// Complete r-partite r-graph with `size` vertices per part; vertex v is in part v / size.
std::pair<Hypergraph, RPartition> complete_partite(unsigned r, std::size_t size) {
  const std::size_t n = r * size;
  RPartition parts{r, std::vector<std::optional<Color>>(n)};
  for (std::size_t v = 0; v < n; ++v) parts.color[v] = static_cast<Color>(v / size);
  std::vector<VertexSet> edges;
  const Hypergraph complete = complete_hypergraph(n, r);
  for (const auto& e : complete.edges()) {
    std::set<Color> seen;
    for (Vertex v : e) seen.insert(*parts.color[v]);
    if (seen.size() == r) edges.push_back(e);
  }
  return {Hypergraph(r, n, std::move(edges)), parts};
}

TEST(FindEmbedding, Examples) {
  auto f = find_embedding(tight_path_p43(), complete_hypergraph(6, 3));
  ASSERT_TRUE(f);
  EXPECT_TRUE(is_valid_embedding(tight_path_p43(), complete_hypergraph(6, 3), *f));
  EXPECT_FALSE(find_embedding(tight_path_p43(), complete_hypergraph(5, 3)));
  EXPECT_FALSE(find_embedding(fixtures::single_triple(), Hypergraph(3, 5)));
  EXPECT_THROW(find_embedding(tight_path_p43(), complete_hypergraph(6, 2)), Error);
}

TEST(FindEmbedding, IgnoresIsolatedPatternVertices) {
  Hypergraph padded = fixtures::single_triple().with_vertex_count(10);
  auto f = find_embedding(padded, complete_hypergraph(4, 3));
  ASSERT_TRUE(f);
  EXPECT_TRUE(is_valid_embedding(padded, complete_hypergraph(4, 3), *f));
}

TEST(FindEmbedding, ValidatorRejectsBadMaps) {
  Hypergraph host = complete_hypergraph(6, 3);
  Embedding clash{{0, 1, 2, 3, 4, 0}};
  EXPECT_FALSE(is_valid_embedding(tight_path_p43(), host, clash));
  Embedding partial{{0, 1, 2, 3, 4, std::nullopt}};
  EXPECT_FALSE(is_valid_embedding(tight_path_p43(), host, partial));
  Embedding off_edge{{0, 1, 2, 3, 4, 5}};
  EXPECT_FALSE(is_valid_embedding(tight_path_p43(), host.without_edge(VertexSet{3, 4, 5}), off_edge));
}

TEST(FindEmbedding, AgreesWithBruteForceOnRandomHosts) {
  std::mt19937_64 rng(99);
  std::vector<Hypergraph> patterns;
  for (std::size_t t = 1; t <= 4; ++t) {
    for (const auto& tree : enumerate_tight_trees(3, t)) patterns.push_back(tree);
  }
  patterns.push_back(Hypergraph(3, 6, {VertexSet{0, 1, 2}, VertexSet{3, 4, 5}}));
  patterns.push_back(complete_hypergraph(4, 3));
  for (int trial = 0; trial < 120; ++trial) {
    Hypergraph host = oracle::random_hypergraph(3, 5 + trial % 3, 0.15 + 0.05 * (trial % 10), rng);
    for (const auto& pattern : patterns) {
      auto f = find_embedding(pattern, host);
      ASSERT_EQ(f.has_value(), oracle::contains(host, pattern)) << format_hypergraph(pattern) << format_hypergraph(host);
      if (f) EXPECT_TRUE(is_valid_embedding(pattern, host, *f));
    }
  }
}

TEST(ForEachEmbedding, CountsAutomorphismsOfCompleteHost) {
  // injective maps of the single triple into K_5^3: 5*4*3
  std::size_t count = 0;
  std::set<std::vector<std::optional<Vertex>>> distinct;
  for_each_embedding(fixtures::single_triple(), complete_hypergraph(5, 3), [&](const Embedding& f) {
    ++count;
    distinct.insert(f.image);
    return true;
  });
  EXPECT_EQ(count, 60u);
  EXPECT_EQ(distinct.size(), 60u);
}

TEST(ForEachEmbedding, StopsWhenVisitorReturnsFalse) {
  std::size_t count = 0;
  for_each_embedding(tight_path_p43(), complete_hypergraph(6, 3), [&](const Embedding&) { return ++count < 3; });
  EXPECT_EQ(count, 3u);
}

TEST(FindEmbeddingUsing, ImageContainsTheEdge) {
  Hypergraph host = complete_hypergraph(6, 3);
  const Hypergraph path = tight_path_p43();
  for (const auto& e : host.edges()) {
    auto f = find_embedding_using(path, host, e);
    ASSERT_TRUE(f);
    ASSERT_TRUE(is_valid_embedding(path, host, *f));
    bool uses = false;
    for (const auto& pe : path.edges()) uses = uses || f->map(pe) == e;
    EXPECT_TRUE(uses);
  }
  Hypergraph star = fixtures::star_012_013_014();
  // the triple 345 of the path host cannot carry a copy of the star
  EXPECT_FALSE(find_embedding_using(star, tight_path_p43(), VertexSet{3, 4, 5}));
}

TEST(ColorPreservingEmbed, TightPathIntoCompletePartite) {
  auto [host, parts] = complete_partite(3, 4);
  Hypergraph tree = tight_path_p43();
  auto cert = *tight_order(tree);
  RPartition phi = r_partition(tree, cert);
  Embedding f = color_preserving_embed(tree, cert, phi, host, parts);
  EXPECT_TRUE(is_valid_embedding(tree, host, f));
  for (Vertex u = 0; u < 6; ++u) EXPECT_EQ(*parts.color[*f.image[u]], *phi.color[u]);
}

TEST(ColorPreservingEmbed, SingleEdgeIntoPartiteHost) {
  Hypergraph host(3, 3, {VertexSet{0, 1, 2}});
  RPartition parts{3, {2, 0, 1}};
  Hypergraph tree = fixtures::single_triple();
  auto cert = *tight_order(tree);
  Embedding f = color_preserving_embed(tree, cert, r_partition(tree, cert), host, parts);
  EXPECT_EQ(f.image, (std::vector<std::optional<Vertex>>{1, 2, 0}));
}

TEST(ColorPreservingEmbed, PreconditionErrorsAreDistinct) {
  Hypergraph tree = tight_path_p43();
  auto cert = *tight_order(tree);
  RPartition phi = r_partition(tree, cert);
  auto expect_code = [](auto&& call, ErrorCode code) {
    try {
      call();
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << e.what();
    }
  };
  auto [thin, thin_parts] = complete_partite(3, 3);  // codegree 3 = t - 1
  expect_code([&] { color_preserving_embed(tree, cert, phi, thin, thin_parts); }, ErrorCode::CodegreeTooLow);

  auto [host, parts] = complete_partite(3, 4);
  RPartition improper = phi;
  improper.color[3] = improper.color[1];
  expect_code([&] { color_preserving_embed(tree, cert, improper, host, parts); }, ErrorCode::ImproperColoring);

  Hypergraph k6 = complete_hypergraph(6, 3);
  RPartition three_parts{3, {0, 0, 1, 1, 2, 2}};
  expect_code([&] { color_preserving_embed(tree, cert, phi, k6, three_parts); }, ErrorCode::NotRPartite);
}

TEST(ExtractMinCodegree, CompleteHostIsKept) {
  Hypergraph k6 = complete_hypergraph(6, 3);
  EXPECT_EQ(extract_min_codegree(k6, 1), k6);
}

TEST(ExtractMinCodegree, PendantEdgeIsRemoved) {
  Hypergraph g = complete_hypergraph(6, 3).with_vertex_count(7).with_edge(VertexSet{0, 1, 6});
  EXPECT_EQ(extract_min_codegree(g, 1), complete_hypergraph(6, 3).with_vertex_count(7));
}

TEST(ExtractMinCodegree, PreconditionError) {
  EXPECT_THROW(extract_min_codegree(tight_path_p43(), 1), Error);  // 4 <= 1 * 9
}

TEST(ExtractMinCodegree, PostconditionsOnRandomDenseHosts) {
  std::mt19937_64 rng(4);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph g = oracle::random_hypergraph(3, 6 + trial % 4, 0.7, rng);
    const std::size_t q = trial % 3;
    if (g.empty() || BigInt(g.edge_count()) <= BigInt(q) * shadow(g).size()) continue;
    ++tested;
    Hypergraph h = extract_min_codegree(g, q);
    ASSERT_FALSE(h.empty());
    EXPECT_GE(min_p_degree(h, 2), q + 1);
    EXPECT_GT(BigInt(h.edge_count()), BigInt(q) * shadow(h).size());
    for (const auto& e : h.edges()) EXPECT_TRUE(g.contains_edge(e));
  }
  EXPECT_GT(tested, 100);
}

TEST(DenseLink, CompleteSixThree) {
  DenseLink d = dense_link_vertex(complete_hypergraph(6, 3), Rational(39, 10));
  EXPECT_EQ(d.vertex, 0u);
  EXPECT_EQ(d.link.edge_count(), 10u);
  EXPECT_EQ(shadow(d.link).size(), 5u);
}

TEST(DenseLink, Errors) {
  EXPECT_THROW(dense_link_vertex(fixtures::single_triple(), Rational(2)), Error);
  EXPECT_THROW(dense_link_vertex(complete_hypergraph(5, 2), Rational(1)), Error);
}

TEST(DenseLink, CompleteSevenThree) {
  DenseLink d = dense_link_vertex(complete_hypergraph(7, 3), Rational(3));
  EXPECT_GT(Rational(d.link.edge_count()), Rational(3, 2) * Rational(shadow(d.link).size()));
  EXPECT_EQ(d.link, link(complete_hypergraph(7, 3), VertexSet{d.vertex}));
}

TEST(DenseLink, ContractOnRandomHostsJustBelowDensity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned r = 3 + trial % 2;
    Hypergraph g = oracle::random_hypergraph(r, r + 2 + trial % 4, 0.5, rng);
    if (g.empty()) continue;
    const Rational alpha = Rational(BigInt(r * g.edge_count()), BigInt(shadow(g).size())) - Rational(1, 100);
    DenseLink d = dense_link_vertex(g, alpha);
    EXPECT_GT(Rational(d.link.edge_count()), alpha / (r - 1) * Rational(shadow(d.link).size()));
    EXPECT_EQ(d.link, link(g, VertexSet{d.vertex}));
  }
}

TEST(Rainbow, SingleEdgeIsKept) {
  RainbowSplit s = rainbow_subgraph(fixtures::single_triple());
  EXPECT_EQ(s.rainbow.edge_count(), 1u);
  EXPECT_TRUE(s.parts.is_proper_for(s.rainbow));
}

TEST(Rainbow, CompleteFourThree) {
  RainbowSplit s = rainbow_subgraph(complete_hypergraph(4, 3));
  EXPECT_GE(s.rainbow.edge_count(), 1u);
  EXPECT_TRUE(s.parts.is_proper_for(s.rainbow));
}

TEST(Rainbow, GuaranteeOnRandomHypergraphs) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned r = trial < 100 ? 3 : 2 + trial % 3;
    Hypergraph g = oracle::random_hypergraph(r, r + 1 + trial % 8, 0.5, rng);
    if (g.empty()) continue;
    RainbowSplit s = rainbow_subgraph(g);
    BigInt fact = 1, power = 1;
    for (unsigned i = 1; i <= r; ++i) {
      fact *= i;
      power *= r;
    }
    EXPECT_GE(BigInt(s.rainbow.edge_count()), ceil_of(Rational(fact * g.edge_count(), power)));
    EXPECT_TRUE(s.parts.is_proper_for(s.rainbow));
    for (const auto& e : g.edges()) {
      std::set<Color> cs;
      for (Vertex v : e) cs.insert(*s.parts.color[v]);
      EXPECT_EQ(cs.size() == r, s.rainbow.contains_edge(e));
    }
  }
}

TEST(PatternOfEdge, SortsCodegrees) {
  // d(e \ A_0) = d({1,2}) = 5, d(e \ A_1) = d({0,2}) = 2, d(e \ A_2) = d({0,1}) = 7
  std::vector<VertexSet> edges{VertexSet{0, 1, 2}};
  for (Vertex x = 3; x <= 6; ++x) edges.push_back(VertexSet{1, 2, x});
  edges.push_back(VertexSet{0, 2, 7});
  for (Vertex x = 8; x <= 13; ++x) edges.push_back(VertexSet{0, 1, x});
  Hypergraph g(3, 14, edges);
  RPartition parts{3, std::vector<std::optional<Color>>(14)};
  parts.color[0] = 0;
  parts.color[1] = 1;
  parts.color[2] = 2;
  EXPECT_EQ(pattern(g, VertexSet{0, 1, 2}, parts).order, (std::vector<Color>{1, 0, 2}));
}

TEST(PatternOfEdge, TiesGiveIdentity) {
  RPartition parts{3, {0, 1, 2, 0}};
  EXPECT_EQ(pattern(complete_hypergraph(4, 3), VertexSet{0, 1, 2}, parts).order, (std::vector<Color>{0, 1, 2}));
}

TEST(PatternOfEdge, NonRainbowEdgeIsAnError) {
  RPartition parts{3, {0, 1, 2, 0}};
  EXPECT_THROW(pattern(complete_hypergraph(4, 3), VertexSet{0, 1, 3}, parts), Error);
}

}  // namespace
}  // namespace tightturan
