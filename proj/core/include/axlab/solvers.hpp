#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "axlab/generators.hpp"
#include "axlab/objectives.hpp"

namespace axlab {

struct SolverLimits {
  /// Largest connected component the brute-force solver will enumerate.
  std::size_t max_component_vertices = 12;
  /// Largest optima set either solver will materialise.
  std::size_t max_optima = 100000;
};

/// Every optimal clustering of a graph, in canonical order, without repeats.
/// Deterministic methods produce a single clustering with no objective.
struct OptimaSet {
  std::optional<Objective> objective;
  std::optional<Rational> value;
  std::vector<Clustering> clusterings;

  bool contains(const Clustering& c) const;
  /// Some optimum whose clusters all lie inside clusters of `coarse`.
  bool has_refinement_of(const Clustering& coarse) const;
};

nlohmann::json optima_to_json(const OptimaSet& o);
OptimaSet optima_from_json(const nlohmann::json& j);

/// Exact optimum over partitions into connected clusters, solved one
/// connected component at a time by restricted-growth enumeration.
/// Throws SolverRefusal when a component exceeds the vertex limit or the
/// optima set exceeds max_optima.
OptimaSet brute_force_optimum(const Graph& g, const Objective& objective, const SolverLimits& limits = {});

/// Modularity optimum of a recipe network restricted to a per-kind candidate
/// space: clique by block-size multiset, star by number of split-off leaves,
/// pair_of_cliques (n >= 6) by its eight candidate clusterings,
/// ring_of_cliques by unions of consecutive cliques, edge_pair as a 2-clique.
/// Throws SolverRefusal for any other kind or objective.
OptimaSet structured_optimum(const NetworkRecipe& recipe, const Objective& objective,
                             const SolverLimits& limits = {});

/// True when every component kind of the recipe is handled by structured_optimum.
bool structured_supports(const NetworkRecipe& recipe, const Objective& objective);

struct OptimalityReport {
  bool optimal = false;
  Rational score;
  Rational optimum;
  /// optimum - score, never negative.
  Rational margin;
};

OptimalityReport is_optimal(const Graph& g, const Clustering& c, const Objective& objective,
                            const SolverLimits& limits = {});

}  // namespace axlab
