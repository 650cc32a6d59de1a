#include <gtest/gtest.h>

#include <sstream>

#include "axlab/generators.hpp"
#include "axlab/graph.hpp"
#include "oracles.hpp"

using namespace axlab;

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Graph, EdgesAndAdjacencyAreSorted) {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges().front(), Edge(0, 1));
  EXPECT_EQ(g.edges().back(), Edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.degree(1), 2u);
  const auto n = g.neighbors(1);
  EXPECT_EQ(std::vector<Vertex>(n.begin(), n.end()), (std::vector<Vertex>{0, 3}));
}

TEST(Graph, EdgeAdditionAndRemoval) {
  const Graph g = path(3);
  const Graph h = g.with_edge_added(0, 2);
  EXPECT_EQ(h, cycle(3));
  EXPECT_EQ(h.with_edge_removed(2, 0), g);
  EXPECT_THROW(g.with_edge_removed(0, 2), std::invalid_argument);
  EXPECT_THROW(g.with_edge_added(0, 1), std::invalid_argument);
}

TEST(Graph, EdgeListRoundTrip) {
  const Graph g = pair_of_cliques(4);
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text.substr(0, 4), "n 8\n");
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(parse_edge_list("# comment\nn 3\n2 1\n\n0 1\n"), path(3));
  EXPECT_THROW(parse_edge_list("0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("n 2\n0\n"), std::invalid_argument);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
}

TEST(Graph, DisjointUnionShiftsSecondOperand) {
  const Graph g = disjoint_union(clique(3), clique(2));
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_EQ(connected_components(g), (std::vector<VertexSet>{{0, 1, 2}, {3, 4}}));
}

TEST(Graph, ConnectedSubsets) {
  const Graph g = path(4);
  EXPECT_TRUE(is_connected_subset(g, VertexSet{1, 2}));
  EXPECT_FALSE(is_connected_subset(g, VertexSet{0, 2}));
  EXPECT_TRUE(is_connected_subset(g, VertexSet{3}));
}

TEST(Graph, InducedSubgraphTranslatesBothWays) {
  const Graph g = cycle(5);
  const InducedSubgraph h = induced_subgraph(g, VertexSet{1, 2, 4});
  EXPECT_EQ(h.graph, Graph(3, {{0, 1}}));
  EXPECT_EQ(h.to_parent(Clustering({{0, 1}, {2}})), Clustering({{1, 2}, {4}}));
  EXPECT_EQ(h.to_local(Clustering({{1}, {2, 4}})), Clustering({{0}, {1, 2}}));
}

TEST(KCore, MatchesPeelingOracle) {
  for (unsigned seed = 0; seed < 60; ++seed) {
    const Graph g = oracle::random_graph(4 + seed % 9, 200 + 10 * (seed % 50), seed);
    std::size_t top = 0;
    for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
      const auto expected = oracle::naive_k_core(g, k);
      EXPECT_EQ(k_core(g, k), expected) << "seed " << seed << " k " << k;
      if (!expected.empty()) top = k;
    }
    EXPECT_EQ(degeneracy(g), top) << "seed " << seed;
  }
}

TEST(KCore, SmallCases) {
  EXPECT_EQ(degeneracy(Graph(4, {})), 0u);
  EXPECT_EQ(degeneracy(clique(5)), 4u);
  EXPECT_EQ(k_core(disjoint_union(cycle(4), path(3)), 2), (std::vector<VertexSet>{{0, 1, 2, 3}}));
  EXPECT_THROW(k_core(path(3), 0), std::invalid_argument);
}

TEST(MinCut, MatchesExhaustiveOracle) {
  for (unsigned seed = 0; seed < 80; ++seed) {
    const Graph g = oracle::random_graph(3 + seed % 10, 350 + 5 * (seed % 100), 1000 + seed);
    for (const auto& comp : connected_components(g)) {
      if (comp.size() < 2) continue;
      EXPECT_EQ(min_cut(g, comp), oracle::naive_min_cut(g, comp)) << "seed " << seed;
    }
  }
}

TEST(MinCut, KnownValues) {
  EXPECT_EQ(min_cut(clique(6), VertexSet{0, 1, 2, 3, 4, 5}), 5u);
  EXPECT_EQ(min_cut(cycle(7), VertexSet{0, 1, 2, 3, 4, 5, 6}), 2u);
  const Graph poc = pair_of_cliques(5);
  VertexSet all;
  for (Vertex v = 0; v < 10; ++v) all.push_back(v);
  EXPECT_EQ(min_cut(poc, all), 1u);
  const Graph ring = ring_of_cliques(3, 3);
  VertexSet ring_all;
  for (Vertex v = 0; v < 9; ++v) ring_all.push_back(v);
  EXPECT_EQ(min_cut(ring, ring_all), 2u);
  EXPECT_THROW(min_cut(path(3), VertexSet{0}), std::invalid_argument);
  EXPECT_THROW(min_cut(path(3), VertexSet{0, 2}), std::invalid_argument);
}
