#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axlab/methods.hpp"

namespace axlab {

enum class Axiom {
  richness,
  standard_consistency,
  refinement_consistency,
  interedge_consistency,
  connectivity,
  pair_of_cliques,
  fixed_point,
};

enum class Outcome {
  pass_all_probes,
  counterexample_found,
  witness_verified,
  refuted_exhaustively,
  inconclusive,
};

std::string to_string(Axiom a);
std::string to_string(Outcome o);
Axiom axiom_from_string(const std::string& name);
Outcome outcome_from_string(const std::string& name);
const std::vector<Axiom>& all_axioms();

/// True for outcomes that support the method satisfying the axiom.
inline bool supports_axiom(Outcome o) { return o == Outcome::pass_all_probes || o == Outcome::witness_verified; }
inline bool refutes_axiom(Outcome o) {
  return o == Outcome::counterexample_found || o == Outcome::refuted_exhaustively;
}

struct AxiomVerdict {
  Axiom axiom = Axiom::richness;
  MethodSpec method;
  Outcome outcome = Outcome::inconclusive;
  std::size_t probes = 0;
  std::string summary;
  /// Networks, clusterings and perturbation traces needed for replay.
  nlohmann::json evidence = nlohmann::json::object();
};

nlohmann::json verdict_to_json(const AxiomVerdict& v);
AxiomVerdict verdict_from_json(const nlohmann::json& j);

struct Perturbation {
  enum class Kind { add_intra_edge, remove_inter_edge };
  Kind kind = Kind::add_intra_edge;
  Edge edge;
};

nlohmann::json perturbation_to_json(const Perturbation& p);
Perturbation perturbation_from_json(const nlohmann::json& j);

/// add_intra_edge needs both ends in one cluster of `relative_to` and no edge
/// yet; remove_inter_edge needs an existing edge between two clusters.
bool is_valid(const Perturbation& p, const Graph& g, const Clustering& relative_to);
/// Applies the steps in order, validating each against the evolving graph.
/// Throws std::invalid_argument on the first invalid step.
Graph apply_perturbations(const Graph& g, const Clustering& relative_to, const std::vector<Perturbation>& steps);

/// Every single valid perturbation of g relative to c, additions first, each
/// group in edge order. interedge_only restricts to removals.
std::vector<Perturbation> single_perturbations(const Graph& g, const Clustering& c, bool interedge_only);

/// A network given either as a recipe (enabling the structured solver) or as
/// a bare graph.
struct ProbeNetwork {
  std::string label;
  Graph graph;
  std::optional<NetworkRecipe> recipe;

  static ProbeNetwork of(std::string label, Graph g);
  static ProbeNetwork of(std::string label, NetworkRecipe r);
};

nlohmann::json probe_network_to_json(const ProbeNetwork& p);
ProbeNetwork probe_network_from_json(const nlohmann::json& j);

OptimaSet run_on(const MethodSpec& m, const ProbeNetwork& p);

/// Seeded G(n, p) graphs with 2..max_vertices vertices.
std::vector<Graph> fuzz_graphs(std::uint64_t seed, std::size_t count, std::size_t max_vertices);

// Richness.

/// One clique per cluster, no edges between clusters.
Graph clique_witness(const Clustering& gamma);

/// Γ = {{0,1}}, all singletons on 3, one block on 4, then random partitions
/// on 1..max_vertices vertices.
std::vector<Clustering> richness_samples(std::uint64_t seed, std::size_t count, std::size_t max_vertices);

AxiomVerdict check_richness(const MethodSpec& m, const std::vector<Clustering>& samples,
                            std::size_t exhaustive_vertex_limit = 4);

// Consistency.

enum class ConsistencyMode { standard, refinement, interedge };
Axiom axiom_for(ConsistencyMode mode);

struct ProbeBudget {
  std::size_t probes = 200;
  std::uint64_t seed = 1;
  std::size_t max_sequence = 4;
};

/// Single perturbations of g first, then random perturbation sequences until
/// the budget is spent or a counterexample appears.
AxiomVerdict check_consistency(const MethodSpec& m, const ProbeNetwork& g, ConsistencyMode mode,
                               const ProbeBudget& budget);

/// As check_consistency over several networks, splitting the budget evenly.
AxiomVerdict check_consistency(const MethodSpec& m, const std::vector<ProbeNetwork>& networks,
                               ConsistencyMode mode, const ProbeBudget& budget);

/// A fixed perturbation: `perturbed` must equal `base` with `steps` applied,
/// where the steps are the edge difference of the two built networks.
struct ScriptedProbe {
  std::string label;
  ProbeNetwork base;
  ProbeNetwork perturbed;
};

/// Validates the probe and judges it against every baseline output for which
/// the edge difference is a valid perturbation sequence.
AxiomVerdict check_consistency_scripted(const MethodSpec& m, const ScriptedProbe& probe, ConsistencyMode mode);

/// Edge difference of two graphs on the same vertex set as perturbation steps
/// (additions first). Throws when the vertex counts differ.
std::vector<Perturbation> edge_difference(const Graph& base, const Graph& perturbed);

// Connectivity.

struct ConnectivityFunction {
  std::string name;
  std::function<std::int64_t(std::size_t)> f;
};

/// max(0, floor(log2 n) - 2).
ConnectivityFunction reference_connectivity_function();
/// ceil(gamma (n - 1)) - 1.
ConnectivityFunction cpm_connectivity_function(const Rational& gamma);

enum class CutComparison { strict, weak };

/// Every non-singleton cluster of every output must have min cut > f(n)
/// (strict) or >= f(n) (weak); disconnected clusters count as cut 0.
AxiomVerdict check_connectivity(const MethodSpec& m, const ConnectivityFunction& f,
                                const std::vector<ProbeNetwork>& samples, CutComparison cmp = CutComparison::strict);

// Pair-of-Cliques.

/// Smallest n >= 2 with gamma (2n - 1) > 1.
std::size_t cpm_pair_of_cliques_threshold(const Rational& gamma);

/// For each n, builds pair_of_cliques(n) followed by `context` and asks
/// whether A and B are clusters of every output. With claimed_n0 the verdict
/// passes iff all n >= claimed_n0 succeed; without it the verdict fails iff
/// the largest scheduled n fails.
AxiomVerdict check_pair_of_cliques(const MethodSpec& m, const std::vector<std::size_t>& schedule,
                                   const std::optional<NetworkRecipe>& context,
                                   std::optional<std::size_t> claimed_n0 = std::nullopt);

/// Same check with the context chosen per n as a clique on 2 C(n,2) + 1 vertices.
AxiomVerdict check_pair_of_cliques_clique_context(const MethodSpec& m, const std::vector<std::size_t>& schedule);

// Fixed point.

/// For each sample and a few of its outputs, every single cluster and up to
/// subset_budget random unions of clusters are re-clustered on their induced
/// subgraph. Optimizers pass iff the restriction is optimal there,
/// deterministic methods iff they return exactly the restriction.
AxiomVerdict check_fixed_point(const MethodSpec& m, const std::vector<ProbeNetwork>& samples,
                               std::size_t subset_budget, std::uint64_t seed);

/// Worst-case verdict: counterexamples beat inconclusive beats pass.
AxiomVerdict combine_verdicts(Axiom axiom, const MethodSpec& m, const std::vector<AxiomVerdict>& parts);

// Closed-form checks for the pair-of-cliques candidate elimination.

struct InequalityCheck {
  std::string name;
  /// Left side minus right side of the closed-form inequality.
  Rational closed_form_margin;
  bool closed_form_holds = false;
  /// The same comparison evaluated directly from cluster scores.
  Rational direct_margin;
  bool direct_holds = false;
};

struct OptionInequalityReport {
  std::size_t n = 0;
  std::size_t total_edges = 0;
  std::vector<InequalityCheck> checks;
  /// Q({A, B}) - Q(option k) for k = 1..6 on the concrete network.
  std::vector<Rational> option_gaps;
};

/// n >= 3 and total_edges >= n^2 - n + 1. The concrete network is
/// pair_of_cliques(n) plus a path carrying the remaining edges.
OptionInequalityReport verify_option_inequalities(std::size_t n, std::size_t total_edges);
nlohmann::json option_report_to_json(const OptionInequalityReport& r);

struct InteredgeSignReport {
  std::size_t e = 0;
  std::size_t total_edges = 0;
  /// delta_q_interedge at total_edges.
  Rational closed_form;
  /// Q(G0 whole) - Q(G0 split across the bridge) on the concrete network.
  Rational direct;
  /// delta_q_pair before and after removing the bridge.
  Rational pair_gain;
  Rational pair_gain_after_removal;
  bool threshold_holds = false;  // |E| < 2e^4 - 2e^2 - 1/2
};

/// Network: a pair-of-cliques component with e edges per clique (a path with
/// 2e + 1 edges when e is not C(n, 2)) plus two modules of e^2 and e^2 - 1
/// edges joined by one bridge.
InteredgeSignReport verify_interedge_signs(std::size_t e);
nlohmann::json interedge_report_to_json(const InteredgeSignReport& r);

/// Re-runs the recorded evidence and returns an empty string on success,
/// otherwise a description of the first mismatch.
std::string replay_verdict(const AxiomVerdict& v);

}  // namespace axlab
