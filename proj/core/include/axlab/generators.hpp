#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "axlab/graph.hpp"

namespace axlab {

enum class ComponentKind {
  clique,
  star,
  path,
  cycle,
  pair_of_cliques,
  ring_of_cliques,
  edge_pair,
  ikc_fig,
  edge_budget_module,
  bridged_modules,
};

/// Small IKC probe networks. Primed variants are the perturbed networks.
enum class IkcFigure { n1, n1_prime, n2, n2_prime, n3, n3_prime };

std::string to_string(ComponentKind kind);
std::string to_string(IkcFigure fig);
IkcFigure ikc_figure_from_string(const std::string& name);

/// One building block of a recipe. Only the fields relevant to `kind` are read:
/// clique/path/cycle/pair_of_cliques use `n`, star uses `p`, ring_of_cliques
/// uses `m` and `n`, edge_budget_module uses `edges`, bridged_modules uses
/// `edges` and `partner_edges`, ikc_fig uses `figure`.
struct ComponentRecipe {
  ComponentKind kind = ComponentKind::clique;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t edges = 0;
  std::size_t partner_edges = 0;
  IkcFigure figure = IkcFigure::n1;

  static ComponentRecipe clique(std::size_t n);
  static ComponentRecipe star(std::size_t p);
  static ComponentRecipe path(std::size_t n);
  static ComponentRecipe cycle(std::size_t n);
  static ComponentRecipe pair_of_cliques(std::size_t n);
  static ComponentRecipe ring_of_cliques(std::size_t m, std::size_t n);
  static ComponentRecipe edge_pair();
  static ComponentRecipe ikc_fig(IkcFigure which);
  static ComponentRecipe edge_budget_module(std::size_t edges);
  static ComponentRecipe bridged_modules(std::size_t edges, std::size_t partner_edges);

  friend bool operator==(const ComponentRecipe&, const ComponentRecipe&) = default;
};

/// A network as a disjoint union of components, laid out in list order.
struct NetworkRecipe {
  std::vector<ComponentRecipe> components;

  friend bool operator==(const NetworkRecipe&, const NetworkRecipe&) = default;
};

std::size_t vertex_count(const ComponentRecipe& c);
Graph build(const ComponentRecipe& c);
Graph build(const NetworkRecipe& r);

/// First vertex of each component of r in the built graph.
std::vector<std::size_t> component_offsets(const NetworkRecipe& r);

nlohmann::json recipe_to_json(const NetworkRecipe& r);
NetworkRecipe recipe_from_json(const nlohmann::json& j);

// Named constructors.

Graph clique(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Vertex 0 is the centre, 1..p the leaves.
Graph p_star(std::size_t p);
/// A = 0..n-1, B = n..2n-1, bridge (0, n). Requires n >= 2.
Graph pair_of_cliques(std::size_t n);
/// m cliques of size n in a cycle; clique i is vertices i*n..i*n+n-1 and its
/// vertex 1 is joined to vertex 0 of clique (i+1) mod m.
Graph ring_of_cliques(std::size_t m, std::size_t n);
/// Connected module with exactly `edge_count` edges and minimum degree 2:
/// the smallest clique with enough edges, thinned highest-index edge first.
Graph edge_budget_module(std::size_t edge_count);
/// edge_budget_module(a) and edge_budget_module(b) joined at their vertex 0.
Graph bridged_modules(std::size_t edges_a, std::size_t edges_b);
/// Each IKC probe network including its disjoint single-edge component.
Graph ikc_fig_network(IkcFigure which);

enum class ContextVariant { star_context, clique_context, interedge_context };

/// Returns n with C(n, 2) == e, or 0 when e is not a triangular number.
std::size_t clique_size_for_edges(std::size_t e);

/// Pair-of-cliques context networks for clique edge count e = C(n, 2), n >= 6:
/// star_context = pair_of_cliques(n) + (2e)-star, clique_context =
/// pair_of_cliques(n) + (2e+1)-clique, interedge_context = pair_of_cliques(n)
/// + two modules of e^2 and e^2-1 edges joined by one bridge.
NetworkRecipe context_recipe(ContextVariant variant, std::size_t e);
Graph context_network(ContextVariant variant, std::size_t e);

/// Uniform G(n, p) with an explicit seed; p given as per-mille.
Graph erdos_renyi(std::size_t n, unsigned p_per_mille, std::uint64_t seed);

}  // namespace axlab
