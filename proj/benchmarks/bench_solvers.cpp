#include <benchmark/benchmark.h>

#include "axlab/generators.hpp"
#include "axlab/methods.hpp"
#include "axlab/solvers.hpp"

using namespace axlab;

static void BM_BruteForceModularity(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 400, 7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(g, Objective::modularity()));
}
BENCHMARK(BM_BruteForceModularity)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BruteForceCpm(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 400, 7);
  const Objective cpm = Objective::cpm(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(g, cpm));
}
BENCHMARK(BM_BruteForceCpm)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_StructuredRing(benchmark::State& state) {
  NetworkRecipe r;
  ComponentRecipe c;
  c.kind = ComponentKind::ring_of_cliques;
  c.m = static_cast<std::size_t>(state.range(0));
  c.n = 5;
  r.components.push_back(c);
  for (auto _ : state) benchmark::DoNotOptimize(structured_optimum(r, Objective::modularity()));
}
BENCHMARK(BM_StructuredRing)->Arg(10)->Arg(30)->Arg(60);

static void BM_StructuredContext(benchmark::State& state) {
  const NetworkRecipe r = context_recipe(ContextVariant::clique_context, 15);
  for (auto _ : state) benchmark::DoNotOptimize(structured_optimum(r, Objective::modularity()));
}
BENCHMARK(BM_StructuredContext);

static void BM_MinCut(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 300, 11);
  VertexSet all;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) all.push_back(static_cast<Vertex>(v));
  for (auto _ : state) benchmark::DoNotOptimize(min_cut(g, all));
}
BENCHMARK(BM_MinCut)->Arg(20)->Arg(60)->Arg(120);

static void BM_KCore(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 50, 3);
  for (auto _ : state) benchmark::DoNotOptimize(k_core(g, degeneracy(g)));
}
BENCHMARK(BM_KCore)->Arg(200)->Arg(1000);

static void BM_Ikc(benchmark::State& state) {
  const Graph g = ring_of_cliques(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(ikc_run(g));
}
BENCHMARK(BM_Ikc)->Arg(10)->Arg(50);
BENCHMARK_MAIN();
