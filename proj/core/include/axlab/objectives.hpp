#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "axlab/graph.hpp"

namespace axlab {

struct Objective {
  enum class Kind { modularity, cpm };

  Kind kind = Kind::modularity;
  Rational gamma = 0;  // only meaningful for cpm

  static Objective modularity() { return {}; }
  /// Throws std::invalid_argument unless 0 < gamma < 1.
  static Objective cpm(Rational gamma);

  std::string name() const;
  friend bool operator==(const Objective&, const Objective&) = default;
};

nlohmann::json objective_to_json(const Objective& o);
Objective objective_from_json(const nlohmann::json& j);

struct ClusterScore {
  VertexSet cluster;
  Rational score;
};

/// Per-cluster scores plus their exact sum.
struct ScoreBreakdown {
  Objective objective;
  std::vector<ClusterScore> per_cluster;
  Rational total;
};

nlohmann::json score_to_json(const ScoreBreakdown& s);

/// e_c / |E| - (d_c / 2|E|)^2 summed over clusters, where d_c uses full-graph
/// degrees. Rejects edgeless graphs and clusterings that do not partition g.
ScoreBreakdown modularity_score(const Graph& g, const Clustering& c);

/// e_c - gamma * C(n_c, 2) summed over clusters.
ScoreBreakdown cpm_score(const Graph& g, const Clustering& c, const Rational& gamma);

ScoreBreakdown score(const Graph& g, const Clustering& c, const Objective& objective);

/// Edges with both ends in s.
std::size_t internal_edges(const Graph& g, std::span<const Vertex> s);
/// Sum of full-graph degrees over s.
std::size_t degree_sum(const Graph& g, std::span<const Vertex> s);

/// Modularity contribution of a single cluster from its counts.
Rational modularity_term(std::size_t internal, std::size_t degrees, std::size_t total_edges);
Rational cpm_term(std::size_t internal, std::size_t size, const Rational& gamma);

/// Integer rescaling of an objective so exact optimisation can run on int64:
/// cluster score = key(...) / scale. Modularity uses scale 4|E|^2 and key
/// 4|E| e_c - d_c^2; CPM with gamma = a/b uses scale 2b and key
/// 2b e_c - a n_c (n_c - 1).
class ScaledObjective {
 public:
  ScaledObjective(const Objective& objective, std::size_t total_edges);

  std::int64_t key(std::int64_t internal, std::int64_t degrees, std::int64_t size) const {
    if (modularity_) return four_m_ * internal - degrees * degrees;
    return two_b_ * internal - a_ * size * (size - 1);
  }
  Rational to_rational(std::int64_t key_sum) const;
  const Rational& scale() const { return scale_; }

 private:
  bool modularity_ = true;
  std::int64_t four_m_ = 0;
  std::int64_t two_b_ = 0;
  std::int64_t a_ = 0;
  Rational scale_ = 1;
};

// Closed forms from the Modularity counterexamples.

/// Q(G1 whole) - Q(A) - Q(B) for two e-edge cliques joined by one edge:
/// (2|E| - 4e^2 - 4e - 1) / (2|E|^2). Requires e >= 1 and |E| >= 2e + 1.
Rational delta_q_pair(std::size_t e, std::size_t total_edges);

/// Modularity of a p-star clustered as centre + (p - x) leaves plus x singleton
/// leaves: (4px - 4|E|x - x^2 - x - 4p^2 + 4|E|p) / (4|E|^2).
Rational star_partition_modularity(std::size_t p, std::size_t x, std::size_t total_edges);

/// Closed form used for the threshold when merging the e^2- and (e^2-1)-edge modules:
/// (2|E| - 4e^4 + 4e^2 + 1) / (2|E|^2). Requires e >= 2.
Rational delta_q_interedge(std::size_t e, std::size_t total_edges);

/// Exact gain from merging two modules with l1 and l2 internal edges that are
/// joined by a single edge: 1/|E| - (2 l1 + 1)(2 l2 + 1) / (2|E|^2).
Rational delta_q_bridged_merge(std::size_t l1, std::size_t l2, std::size_t total_edges);

/// gamma (n - 1): lower bound on any edge cut of an n-vertex CPM-optimal cluster.
Rational cpm_connectivity_bound(const Rational& gamma, std::size_t n);
/// ceil(gamma (n - 1)).
std::int64_t cpm_connectivity_ceiling(const Rational& gamma, std::size_t n);

}  // namespace axlab
