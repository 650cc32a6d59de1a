#pragma once

#include <cstddef>
#include <string>

#include "axlab/solvers.hpp"

namespace axlab {

/// Which graph IKC scores candidate cores against.
enum class IkcBase {
  original,  // the graph passed to this run
  residual,  // the graph left at the current iteration
};

struct MethodSpec {
  enum class Kind { components_are_clusters, nodes_are_clusters, modularity_opt, cpm_opt, ikc };

  Kind kind = Kind::components_are_clusters;
  Rational gamma = 0;
  std::size_t k0 = 0;
  bool modularity_filter = true;
  IkcBase ikc_base = IkcBase::original;
  SolverLimits limits;

  static MethodSpec components();
  static MethodSpec nodes();
  static MethodSpec modularity();
  static MethodSpec cpm(Rational gamma);
  static MethodSpec ikc(std::size_t k0 = 0, bool modularity_filter = true);

  bool is_optimizer() const { return kind == Kind::modularity_opt || kind == Kind::cpm_opt; }
  /// Objective of an optimizer method; throws for the others.
  Objective objective() const;
  /// Display name: Components, Nodes, Modularity, CPM(1/2), IKC, IKC(no-mod).
  std::string name() const;
};

nlohmann::json method_to_json(const MethodSpec& m);
/// Accepts {"kind":"cpm_opt","gamma":"1/2"}, {"kind":"ikc","k0":0,"modularity_filter":false}, ...
MethodSpec method_from_json(const nlohmann::json& j);

/// Optima set for optimizers, singleton set for deterministic methods.
OptimaSet run_method(const MethodSpec& m, const Graph& g);

/// As run_method on build(recipe), but uses the structured solver when the
/// method is modularity_opt and every component kind supports it.
OptimaSet run_method(const MethodSpec& m, const NetworkRecipe& recipe);

/// Iterative k-core clustering: repeatedly take the connected cores at the
/// current degeneracy, keep those with positive modularity (when filtering),
/// turn rejected cores into singletons, and stop once the degeneracy drops
/// below max(k0, 1).
Clustering ikc_run(const Graph& g, std::size_t k0 = 0, bool modularity_filter = true,
                   IkcBase base = IkcBase::original);

}  // namespace axlab
