#include <gtest/gtest.h>

#include "axlab/methods.hpp"

using namespace axlab;

namespace {

Clustering singletons_plus(std::size_t n, std::vector<VertexSet> blocks) {
  std::vector<bool> used(n, false);
  for (const auto& b : blocks) {
    for (Vertex v : b) used[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!used[v]) blocks.push_back({v});
  }
  return Clustering(blocks);
}

Clustering ikc_on(IkcFigure f, bool filter = true) { return ikc_run(ikc_fig_network(f), 0, filter); }

}  // namespace

TEST(Methods, DeterministicMethods) {
  const Graph g = disjoint_union(path(3), clique(2));
  const OptimaSet comps = run_method(MethodSpec::components(), g);
  EXPECT_FALSE(comps.objective.has_value());
  EXPECT_EQ(comps.clusterings, (std::vector<Clustering>{Clustering({{0, 1, 2}, {3, 4}})}));
  EXPECT_EQ(run_method(MethodSpec::nodes(), g).clusterings, (std::vector<Clustering>{Clustering::singletons(5)}));
}

TEST(Methods, OptimizersReportValues) {
  const OptimaSet o = run_method(MethodSpec::cpm(Rational(1, 2)), pair_of_cliques(5));
  ASSERT_TRUE(o.value.has_value());
  EXPECT_EQ(*o.value, 10);
  EXPECT_THROW(MethodSpec::ikc().objective(), std::logic_error);
}

TEST(Methods, RecipeRunUsesStructuredSolverForLargeModularityInputs) {
  const NetworkRecipe ring{{ComponentRecipe::ring_of_cliques(23, 5)}};
  const OptimaSet o = run_method(MethodSpec::modularity(), ring);
  ASSERT_FALSE(o.clusterings.empty());
  EXPECT_THROW(run_method(MethodSpec::modularity(), build(ring)), SolverRefusal);
}

TEST(Methods, Names) {
  EXPECT_EQ(MethodSpec::components().name(), "Components");
  EXPECT_EQ(MethodSpec::nodes().name(), "Nodes");
  EXPECT_EQ(MethodSpec::modularity().name(), "Modularity");
  EXPECT_EQ(MethodSpec::cpm(Rational(1, 3)).name(), "CPM(1/3)");
  EXPECT_EQ(MethodSpec::ikc().name(), "IKC");
  EXPECT_EQ(MethodSpec::ikc(0, false).name(), "IKC(no-mod)");
}

TEST(Methods, JsonRoundTripAndAliases) {
  for (const MethodSpec& m : {MethodSpec::components(), MethodSpec::nodes(), MethodSpec::modularity(),
                              MethodSpec::cpm(Rational(1, 10)), MethodSpec::ikc(2, false)}) {
    EXPECT_EQ(method_to_json(method_from_json(method_to_json(m))), method_to_json(m));
  }
  const MethodSpec cpm = method_from_json(nlohmann::json::parse(R"({"kind":"cpm","gamma":"1/3"})"));
  EXPECT_EQ(cpm.gamma, Rational(1, 3));
  EXPECT_FALSE(method_from_json(nlohmann::json::parse(R"({"kind":"ikc_no_mod"})")).modularity_filter);
  EXPECT_THROW(method_from_json(nlohmann::json::parse(R"({"kind":"louvain"})")), std::invalid_argument);
  EXPECT_THROW(method_from_json(nlohmann::json::parse(R"({"kind":"cpm","gamma":"2"})")), std::invalid_argument);
}

TEST(Ikc, SixCycleIsOneClusterThenChordsCarveAThreeCore) {
  EXPECT_EQ(ikc_on(IkcFigure::n1), Clustering({{0, 1, 2, 3, 4, 5}, {6, 7}}));
  EXPECT_EQ(ikc_on(IkcFigure::n1_prime), Clustering({{0, 1, 2, 3}, {4, 5}, {6, 7}}));
  EXPECT_EQ(ikc_on(IkcFigure::n1, false), ikc_on(IkcFigure::n1));
  EXPECT_EQ(ikc_on(IkcFigure::n1_prime, false), ikc_on(IkcFigure::n1_prime));
}

TEST(Ikc, AddedChordsMergeTwoClustersIntoOneCore) {
  EXPECT_EQ(ikc_on(IkcFigure::n2), Clustering({{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9}}));
  EXPECT_EQ(ikc_on(IkcFigure::n2_prime), Clustering({{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9}}));
  EXPECT_EQ(ikc_on(IkcFigure::n2_prime, false), ikc_on(IkcFigure::n2_prime));
}

TEST(Ikc, NegativeModularityTriangleBecomesSingletons) {
  EXPECT_EQ(ikc_on(IkcFigure::n3), singletons_plus(12, {{10, 11}}));
  EXPECT_EQ(ikc_on(IkcFigure::n3_prime), singletons_plus(12, {{0, 1, 2}, {10, 11}}));
  EXPECT_EQ(ikc_on(IkcFigure::n3, false), singletons_plus(12, {{0, 1, 2}, {10, 11}}));
  EXPECT_EQ(ikc_on(IkcFigure::n3_prime, false), ikc_on(IkcFigure::n3, false));
}

TEST(Ikc, SingleEdgeHasZeroModularity) {
  EXPECT_EQ(ikc_run(clique(2)), Clustering::singletons(2));
  EXPECT_EQ(ikc_run(clique(2), 0, false), Clustering::one_block(2));
}

TEST(Ikc, MinimumCoreLevel) {
  const Graph g = disjoint_union(clique(4), path(3));
  EXPECT_EQ(ikc_run(g, 0, false), Clustering({{0, 1, 2, 3}, {4, 5, 6}}));
  EXPECT_EQ(ikc_run(g, 2, false), Clustering({{0, 1, 2, 3}, {4}, {5}, {6}}));
  EXPECT_EQ(ikc_run(g, 4, false), Clustering::singletons(7));
}

TEST(Ikc, ResidualBaseScoresAgainstTheShrinkingGraph) {
  // A 1-core edge next to a large clique: against the whole graph the edge
  // scores 1/E - (2/2E)^2 > 0, against the residual edge alone it scores 0.
  const Graph g = disjoint_union(clique(5), clique(2));
  EXPECT_EQ(ikc_run(g, 0, true, IkcBase::original), Clustering({{0, 1, 2, 3, 4}, {5, 6}}));
  EXPECT_EQ(ikc_run(g, 0, true, IkcBase::residual), Clustering({{0, 1, 2, 3, 4}, {5}, {6}}));
}
