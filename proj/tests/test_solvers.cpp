#include <gtest/gtest.h>

#include "axlab/solvers.hpp"
#include "oracles.hpp"

using namespace axlab;

namespace {

void expect_matches_oracle(const Graph& g, const Objective& o, const std::string& label) {
  const OptimaSet got = brute_force_optimum(g, o);
  const oracle::NaiveOptimum want = oracle::naive_optimum(g, o, true);
  ASSERT_TRUE(got.value.has_value()) << label;
  EXPECT_EQ(*got.value, want.value) << label;
  EXPECT_EQ(got.clusterings, want.optima) << label;
  for (const auto& c : got.clusterings) EXPECT_EQ(score(g, c, o).total, *got.value) << label;
}

std::vector<NetworkRecipe> catalog() {
  using C = ComponentRecipe;
  std::vector<NetworkRecipe> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back({{C::clique(n)}});
  for (std::size_t p = 1; p <= 8; ++p) out.push_back({{C::star(p)}});
  out.push_back({{C::edge_pair()}});
  out.push_back({{C::pair_of_cliques(6)}});
  for (auto [m, n] : {std::pair{3, 3}, {4, 3}, {3, 4}}) out.push_back({{C::ring_of_cliques(m, n)}});
  out.push_back({{C::ring_of_cliques(3, 3), C::edge_pair()}});
  out.push_back({{C::ring_of_cliques(3, 3), C::star(2)}});
  out.push_back({{C::clique(7), C::clique(5)}});
  out.push_back({{C::star(3), C::star(4), C::clique(3)}});
  out.push_back({{C::clique(4), C::star(3), C::edge_pair()}});
  out.push_back({{C::clique(5), C::clique(5)}});
  out.push_back({{C::star(5), C::star(5)}});
  out.push_back({{C::clique(3), C::ring_of_cliques(3, 3)}});
  out.push_back({{C::clique(8), C::clique(4)}});
  out.push_back({{C::star(6), C::clique(6)}});
  out.push_back({{C::edge_pair(), C::edge_pair(), C::clique(3)}});
  out.push_back({{C::clique(2), C::star(2), C::clique(7)}});
  out.push_back({{C::star(10), C::edge_pair()}});
  out.push_back({{C::clique(12)}});
  out.push_back({{C::clique(6), C::clique(6)}});
  return out;
}

}  // namespace

TEST(BruteForce, MatchesExhaustiveOracleForModularity) {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(2 + seed % 7, 250 + 15 * (seed % 30), seed);
    if (g.edge_count() == 0) continue;
    expect_matches_oracle(g, Objective::modularity(), "seed " + std::to_string(seed));
  }
}

TEST(BruteForce, MatchesExhaustiveOracleForCpm) {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(2 + seed % 7, 250 + 15 * (seed % 30), 500 + seed);
    for (const Rational gamma : {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
      expect_matches_oracle(g, Objective::cpm(gamma), "seed " + std::to_string(seed));
    }
  }
}

TEST(BruteForce, EdgelessModularityIsSingletons) {
  const OptimaSet o = brute_force_optimum(Graph(4, {}), Objective::modularity());
  EXPECT_EQ(o.clusterings, (std::vector<Clustering>{Clustering::singletons(4)}));
  EXPECT_EQ(*o.value, 0);
}

TEST(BruteForce, CpmOnPairOfCliques) {
  const OptimaSet o = brute_force_optimum(pair_of_cliques(5), Objective::cpm(Rational(1, 2)));
  EXPECT_EQ(*o.value, 10);
  EXPECT_EQ(o.clusterings, (std::vector<Clustering>{Clustering({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}})}));
}

TEST(BruteForce, RefusesOversizedComponents) {
  SolverLimits limits;
  limits.max_component_vertices = 5;
  EXPECT_THROW(brute_force_optimum(path(6), Objective::modularity(), limits), SolverRefusal);
  EXPECT_NO_THROW(brute_force_optimum(disjoint_union(path(5), path(5)), Objective::modularity(), limits));
  limits.max_component_vertices = 12;
  limits.max_optima = 3;
  const Graph tied = disjoint_union(path(3), path(3));
  EXPECT_THROW(brute_force_optimum(tied, Objective::cpm(Rational(1, 2)), limits), SolverRefusal);
}

TEST(BruteForce, OptimaSetsMultiplyAcrossComponents) {
  // At gamma = 1/2 a 3-path scores 1/2 whole or with either end split off.
  const Graph g = disjoint_union(path(3), path(3));
  const OptimaSet o = brute_force_optimum(g, Objective::cpm(Rational(1, 2)));
  EXPECT_EQ(o.clusterings.size(), 9u);
  EXPECT_EQ(*o.value, 1);
}

TEST(Structured, AgreesWithBruteForceOnCatalog) {
  std::size_t compared = 0;
  for (const auto& r : catalog()) {
    const Graph g = build(r);
    if (g.vertex_count() > 12 || g.edge_count() == 0 || !structured_supports(r, Objective::modularity())) continue;
    const OptimaSet s = structured_optimum(r, Objective::modularity());
    const OptimaSet b = brute_force_optimum(g, Objective::modularity());
    EXPECT_EQ(*s.value, *b.value) << recipe_to_json(r).dump();
    EXPECT_EQ(s.clusterings, b.clusterings) << recipe_to_json(r).dump();
    ++compared;
  }
  EXPECT_GE(compared, 30u);
}

TEST(Structured, RefusesUnsupportedInputs) {
  const NetworkRecipe path_recipe{{ComponentRecipe::path(4)}};
  EXPECT_FALSE(structured_supports(path_recipe, Objective::modularity()));
  EXPECT_THROW(structured_optimum(path_recipe, Objective::modularity()), SolverRefusal);
  const NetworkRecipe cliques{{ComponentRecipe::clique(4)}};
  EXPECT_FALSE(structured_supports(cliques, Objective::cpm(Rational(1, 2))));
  const NetworkRecipe small_pair{{ComponentRecipe::pair_of_cliques(5)}};
  EXPECT_FALSE(structured_supports(small_pair, Objective::modularity()));
}

TEST(Structured, LargeCliqueContextReturnsPairWhole) {
  const OptimaSet o = structured_optimum(context_recipe(ContextVariant::clique_context, 15), Objective::modularity());
  ASSERT_EQ(o.clusterings.size(), 1u);
  VertexSet g1;
  for (Vertex v = 0; v < 12; ++v) g1.push_back(v);
  EXPECT_TRUE(o.clusterings[0].contains_cluster(g1));
}

TEST(Optimality, ReportsMargins) {
  const Graph g = pair_of_cliques(4);
  const Clustering split({{0, 1, 2, 3}, {4, 5, 6, 7}});
  const OptimalityReport yes = is_optimal(g, split, Objective::cpm(Rational(1, 2)));
  EXPECT_TRUE(yes.optimal);
  EXPECT_EQ(yes.margin, 0);
  const OptimalityReport no = is_optimal(g, Clustering::singletons(8), Objective::cpm(Rational(1, 2)));
  EXPECT_FALSE(no.optimal);
  EXPECT_EQ(no.margin, 6);
}

TEST(OptimaSet, MembershipAndRefinement) {
  OptimaSet o;
  o.clusterings = {Clustering({{0}, {1, 2}})};
  EXPECT_TRUE(o.contains(Clustering({{1, 2}, {0}})));
  EXPECT_TRUE(o.has_refinement_of(Clustering::one_block(3)));
  EXPECT_FALSE(o.has_refinement_of(Clustering({{0, 1}, {2}})));
  const OptimaSet back = optima_from_json(optima_to_json(o));
  EXPECT_EQ(back.clusterings, o.clusterings);
  EXPECT_FALSE(back.value.has_value());
}
