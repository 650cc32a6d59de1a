#include <gtest/gtest.h>

#include "axlab/generators.hpp"

using namespace axlab;

TEST(Generators, BasicShapes) {
  EXPECT_EQ(clique(5).edge_count(), 10u);
  EXPECT_EQ(path(4).edge_count(), 3u);
  EXPECT_EQ(cycle(6).edge_count(), 6u);
  const Graph s = p_star(4);
  EXPECT_EQ(s.vertex_count(), 5u);
  EXPECT_EQ(s.degree(0), 4u);
}

TEST(Generators, PairOfCliques) {
  const Graph g = pair_of_cliques(5);
  EXPECT_EQ(g.vertex_count(), 10u);
  EXPECT_EQ(g.edge_count(), 21u);
  EXPECT_TRUE(g.has_edge(0, 5));
  EXPECT_FALSE(g.has_edge(1, 6));
}

TEST(Generators, RingOfCliques) {
  const Graph g = ring_of_cliques(30, 5);
  EXPECT_EQ(g.vertex_count(), 150u);
  EXPECT_EQ(g.edge_count(), 330u);
  const Graph small = ring_of_cliques(3, 4);
  EXPECT_TRUE(small.has_edge(1, 4));
  EXPECT_TRUE(small.has_edge(9, 0));
  EXPECT_EQ(connected_components(small).size(), 1u);
}

TEST(Generators, IkcFigures) {
  const Graph n3 = ikc_fig_network(IkcFigure::n3);
  EXPECT_EQ(n3.vertex_count(), 12u);
  EXPECT_EQ(n3.edge_count(), 11u);
  const Graph n3p = ikc_fig_network(IkcFigure::n3_prime);
  EXPECT_EQ(n3p.vertex_count(), 12u);
  EXPECT_EQ(n3p.edge_count(), 4u);
  EXPECT_EQ(ikc_fig_network(IkcFigure::n1).edge_count(), 7u);
  EXPECT_EQ(ikc_fig_network(IkcFigure::n1_prime).edge_count(), 10u);
  EXPECT_EQ(ikc_fig_network(IkcFigure::n2).edge_count(), 12u);
  EXPECT_EQ(ikc_fig_network(IkcFigure::n2_prime).edge_count(), 14u);
  for (auto f : {IkcFigure::n1, IkcFigure::n1_prime, IkcFigure::n2, IkcFigure::n2_prime, IkcFigure::n3,
                 IkcFigure::n3_prime}) {
    EXPECT_EQ(ikc_figure_from_string(to_string(f)), f);
  }
}

TEST(Generators, EdgeBudgetModules) {
  for (std::size_t e = 3; e <= 60; ++e) {
    const Graph g = edge_budget_module(e);
    EXPECT_EQ(g.edge_count(), e);
    EXPECT_EQ(connected_components(g).size(), 1u);
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_GE(g.degree(v), 2u) << e;
  }
  const Graph b = bridged_modules(16, 15);
  EXPECT_EQ(b.edge_count(), 32u);
  EXPECT_EQ(connected_components(b).size(), 1u);
}

TEST(Generators, CliqueSizeForEdges) {
  EXPECT_EQ(clique_size_for_edges(15), 6u);
  EXPECT_EQ(clique_size_for_edges(10), 5u);
  EXPECT_EQ(clique_size_for_edges(45), 10u);
}

TEST(Generators, ContextNetworks) {
  const Graph star = context_network(ContextVariant::star_context, 15);
  EXPECT_EQ(star.vertex_count(), 43u);
  EXPECT_EQ(star.edge_count(), 61u);
  const Graph cl = context_network(ContextVariant::clique_context, 15);
  EXPECT_EQ(cl.vertex_count(), 43u);
  EXPECT_EQ(cl.edge_count(), 31u + 465u);
  EXPECT_EQ(connected_components(cl).size(), 2u);
  const Graph ie = context_network(ContextVariant::interedge_context, 15);
  EXPECT_EQ(ie.edge_count(), 31u + 225u + 224u + 1u);
}

TEST(Generators, RecipeJsonRoundTrip) {
  const NetworkRecipe r{{ComponentRecipe::pair_of_cliques(5), ComponentRecipe::star(4),
                         ComponentRecipe::ring_of_cliques(3, 4), ComponentRecipe::edge_pair(),
                         ComponentRecipe::ikc_fig(IkcFigure::n2_prime), ComponentRecipe::bridged_modules(9, 8)}};
  const NetworkRecipe back = recipe_from_json(recipe_to_json(r));
  EXPECT_EQ(back.components, r.components);
  EXPECT_EQ(build(back), build(r));
  EXPECT_EQ(component_offsets(r), (std::vector<std::size_t>{0, 10, 15, 27, 29, 39}));
  EXPECT_THROW(recipe_from_json(nlohmann::json::parse(R"({"components":[{"kind":"clique"}]})")),
               std::invalid_argument);
  EXPECT_THROW(recipe_from_json(nlohmann::json::parse(R"({"components":[{"kind":"blob","n":3}]})")),
               std::invalid_argument);
}

TEST(Generators, ErdosRenyiIsSeedDeterministic) {
  EXPECT_EQ(erdos_renyi(12, 400, 7), erdos_renyi(12, 400, 7));
  EXPECT_NE(erdos_renyi(12, 400, 7), erdos_renyi(12, 400, 8));
  EXPECT_EQ(erdos_renyi(10, 1000, 1).edge_count(), 45u);
  EXPECT_EQ(erdos_renyi(10, 0, 1).edge_count(), 0u);
}
