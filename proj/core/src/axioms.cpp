#include "axlab/axioms.hpp"

#include <algorithm>
#include <bit>

#include "axlab/random.hpp"

namespace axlab {

namespace {

const std::vector<std::pair<Axiom, std::string>>& axiom_names() {
  static const std::vector<std::pair<Axiom, std::string>> names = {
      {Axiom::richness, "richness"},
      {Axiom::standard_consistency, "standard_consistency"},
      {Axiom::refinement_consistency, "refinement_consistency"},
      {Axiom::interedge_consistency, "interedge_consistency"},
      {Axiom::connectivity, "connectivity"},
      {Axiom::pair_of_cliques, "pair_of_cliques"},
      {Axiom::fixed_point, "fixed_point"},
  };
  return names;
}

const std::vector<std::pair<Outcome, std::string>>& outcome_names() {
  static const std::vector<std::pair<Outcome, std::string>> names = {
      {Outcome::pass_all_probes, "pass_all_probes"},
      {Outcome::counterexample_found, "counterexample_found"},
      {Outcome::witness_verified, "witness_verified"},
      {Outcome::refuted_exhaustively, "refuted_exhaustively"},
      {Outcome::inconclusive, "inconclusive"},
  };
  return names;
}

AxiomVerdict make_verdict(Axiom axiom, const MethodSpec& m, Outcome outcome, std::size_t probes,
                          std::string summary, nlohmann::json evidence = nlohmann::json::object()) {
  return {axiom, m, outcome, probes, std::move(summary), std::move(evidence)};
}

nlohmann::json clusterings_json(const OptimaSet& o) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : o.clusterings) list.push_back(clustering_to_json(c));
  return list;
}

nlohmann::json steps_json(const std::vector<Perturbation>& steps) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : steps) list.push_back(perturbation_to_json(s));
  return list;
}

bool has_addition(const std::vector<Perturbation>& steps) {
  return std::any_of(steps.begin(), steps.end(),
                     [](const Perturbation& p) { return p.kind == Perturbation::Kind::add_intra_edge; });
}

bool survives(const OptimaSet& after, const Clustering& baseline, bool refinement) {
  return refinement ? after.has_refinement_of(baseline) : after.contains(baseline);
}

VertexSet range_set(std::size_t lo, std::size_t hi) {
  VertexSet s;
  for (std::size_t v = lo; v < hi; ++v) s.push_back(static_cast<Vertex>(v));
  return s;
}

VertexSet join(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

std::string describe(const Clustering& c) { return clustering_to_json(c).dump(); }

}  // namespace

std::string to_string(Axiom a) {
  for (const auto& [k, name] : axiom_names()) {
    if (k == a) return name;
  }
  return "?";
}

std::string to_string(Outcome o) {
  for (const auto& [k, name] : outcome_names()) {
    if (k == o) return name;
  }
  return "?";
}

Axiom axiom_from_string(const std::string& name) {
  for (const auto& [k, n] : axiom_names()) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown axiom '" + name + "'");
}

Outcome outcome_from_string(const std::string& name) {
  for (const auto& [k, n] : outcome_names()) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown outcome '" + name + "'");
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = [] {
    std::vector<Axiom> out;
    for (const auto& [k, _] : axiom_names()) out.push_back(k);
    return out;
  }();
  return axioms;
}

nlohmann::json verdict_to_json(const AxiomVerdict& v) {
  return {{"axiom", to_string(v.axiom)},     {"method", method_to_json(v.method)},
          {"method_name", v.method.name()},  {"outcome", to_string(v.outcome)},
          {"probes", v.probes},              {"summary", v.summary},
          {"evidence", v.evidence}};
}

AxiomVerdict verdict_from_json(const nlohmann::json& j) {
  AxiomVerdict v;
  v.axiom = axiom_from_string(j.at("axiom").get<std::string>());
  v.method = method_from_json(j.at("method"));
  v.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  v.probes = j.value("probes", std::size_t{0});
  v.summary = j.value("summary", std::string());
  v.evidence = j.value("evidence", nlohmann::json::object());
  return v;
}

nlohmann::json perturbation_to_json(const Perturbation& p) {
  return {{"kind", p.kind == Perturbation::Kind::add_intra_edge ? "add_intra_edge" : "remove_inter_edge"},
          {"edge", {p.edge.u, p.edge.v}}};
}

Perturbation perturbation_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  Perturbation p;
  if (kind == "add_intra_edge") {
    p.kind = Perturbation::Kind::add_intra_edge;
  } else if (kind == "remove_inter_edge") {
    p.kind = Perturbation::Kind::remove_inter_edge;
  } else {
    throw std::invalid_argument("unknown perturbation kind '" + kind + "'");
  }
  p.edge = Edge(j.at("edge").at(0).get<Vertex>(), j.at("edge").at(1).get<Vertex>());
  return p;
}

bool is_valid(const Perturbation& p, const Graph& g, const Clustering& relative_to) {
  const auto labels = relative_to.labels();
  const auto [u, v] = p.edge;
  if (u == v || v >= g.vertex_count() || v >= labels.size()) return false;
  const bool same = labels[u] == labels[v] && labels[u] != static_cast<std::size_t>(-1);
  const bool present = g.has_edge(u, v);
  return p.kind == Perturbation::Kind::add_intra_edge ? same && !present : !same && present;
}

Graph apply_perturbations(const Graph& g, const Clustering& relative_to, const std::vector<Perturbation>& steps) {
  Graph current = g;
  for (const auto& step : steps) {
    if (!is_valid(step, current, relative_to)) {
      throw std::invalid_argument("perturbation " + perturbation_to_json(step).dump() +
                                  " is not valid for clustering " + describe(relative_to));
    }
    current = step.kind == Perturbation::Kind::add_intra_edge ? current.with_edge_added(step.edge.u, step.edge.v)
                                                              : current.with_edge_removed(step.edge.u, step.edge.v);
  }
  return current;
}

std::vector<Perturbation> single_perturbations(const Graph& g, const Clustering& c, bool interedge_only) {
  const auto labels = c.labels();
  std::vector<Perturbation> out;
  if (!interedge_only) {
    for (const auto& cluster : c.clusters()) {
      for (std::size_t i = 0; i < cluster.size(); ++i) {
        for (std::size_t j = i + 1; j < cluster.size(); ++j) {
          if (!g.has_edge(cluster[i], cluster[j])) {
            out.push_back({Perturbation::Kind::add_intra_edge, Edge(cluster[i], cluster[j])});
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Perturbation& a, const Perturbation& b) { return a.edge < b.edge; });
  }
  for (const auto& e : g.edges()) {
    if (labels[e.u] != labels[e.v]) out.push_back({Perturbation::Kind::remove_inter_edge, e});
  }
  return out;
}

std::vector<Perturbation> edge_difference(const Graph& base, const Graph& perturbed) {
  if (base.vertex_count() != perturbed.vertex_count()) {
    throw std::invalid_argument("scripted probe networks have different vertex counts");
  }
  std::vector<Perturbation> out;
  std::vector<Edge> added;
  std::vector<Edge> removed;
  std::set_difference(perturbed.edges().begin(), perturbed.edges().end(), base.edges().begin(), base.edges().end(),
                      std::back_inserter(added));
  std::set_difference(base.edges().begin(), base.edges().end(), perturbed.edges().begin(), perturbed.edges().end(),
                      std::back_inserter(removed));
  for (const auto& e : added) out.push_back({Perturbation::Kind::add_intra_edge, e});
  for (const auto& e : removed) out.push_back({Perturbation::Kind::remove_inter_edge, e});
  return out;
}

ProbeNetwork ProbeNetwork::of(std::string label, Graph g) { return {std::move(label), std::move(g), std::nullopt}; }

ProbeNetwork ProbeNetwork::of(std::string label, NetworkRecipe r) {
  Graph g = build(r);
  return {std::move(label), std::move(g), std::move(r)};
}

nlohmann::json probe_network_to_json(const ProbeNetwork& p) {
  nlohmann::json j = {{"label", p.label}};
  if (p.recipe) {
    j["recipe"] = recipe_to_json(*p.recipe);
  } else {
    j["graph"] = graph_to_json(p.graph);
  }
  return j;
}

ProbeNetwork probe_network_from_json(const nlohmann::json& j) {
  const auto label = j.value("label", std::string());
  if (j.contains("recipe")) return ProbeNetwork::of(label, recipe_from_json(j["recipe"]));
  return ProbeNetwork::of(label, graph_from_json(j.at("graph")));
}

OptimaSet run_on(const MethodSpec& m, const ProbeNetwork& p) {
  return p.recipe ? run_method(m, *p.recipe) : run_method(m, p.graph);
}

std::vector<Graph> fuzz_graphs(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  if (max_vertices < 2) throw std::invalid_argument("fuzz graphs need at least 2 vertices");
  Rng rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(rng.between(2, max_vertices));
    const auto p = static_cast<unsigned>(rng.between(150, 650));
    out.push_back(erdos_renyi(n, p, derive_seed(seed, i)));
  }
  return out;
}

// Richness.

Graph clique_witness(const Clustering& gamma) {
  std::vector<Edge> edges;
  for (const auto& c : gamma.clusters()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(c[i], c[j]);
    }
  }
  return Graph(gamma.vertex_count(), std::move(edges));
}

std::vector<Clustering> richness_samples(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  std::vector<Clustering> out = {Clustering({{0, 1}}), Clustering::singletons(3), Clustering::one_block(4)};
  Rng rng(seed);
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(rng.between(1, max_vertices));
    std::vector<std::size_t> labels(n);
    for (auto& l : labels) l = rng.below(n);
    out.push_back(Clustering::from_labels(labels));
  }
  out.resize(std::min(out.size(), count));
  return out;
}

AxiomVerdict check_richness(const MethodSpec& m, const std::vector<Clustering>& samples,
                            std::size_t exhaustive_vertex_limit) {
  nlohmann::json witnesses = nlohmann::json::array();
  std::size_t probes = 0;
  for (const auto& gamma : samples) {
    const std::size_t n = gamma.vertex_count();
    if (!gamma.is_partition_of(n)) throw std::invalid_argument("richness sample is not a partition of 0..n-1");
    try {
      const Graph witness = clique_witness(gamma);
      ++probes;
      if (run_method(m, witness).contains(gamma)) {
        witnesses.push_back({{"gamma", clustering_to_json(gamma)}, {"network", graph_to_json(witness)}});
        continue;
      }
      if (n > exhaustive_vertex_limit) {
        return make_verdict(Axiom::richness, m, Outcome::inconclusive, probes,
                            "clique witness failed for " + describe(gamma) +
                                " and the vertex count is above the exhaustive limit",
                            {{"check", "richness_open"}, {"gamma", clustering_to_json(gamma)}});
      }
      std::vector<Edge> all_pairs;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
      }
      const std::uint64_t sets = std::uint64_t{1} << all_pairs.size();
      std::optional<Graph> found;
      for (std::uint64_t mask = 0; mask < sets && !found; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all_pairs.size(); ++i) {
          if (mask >> i & 1) edges.push_back(all_pairs[i]);
        }
        Graph g(n, std::move(edges));
        ++probes;
        if (run_method(m, g).contains(gamma)) found = std::move(g);
      }
      if (!found) {
        return make_verdict(Axiom::richness, m, Outcome::refuted_exhaustively, probes,
                            "no edge set on " + std::to_string(n) + " vertices yields " + describe(gamma),
                            {{"check", "richness_refuted"},
                             {"gamma", clustering_to_json(gamma)},
                             {"edge_sets_checked", sets}});
      }
      witnesses.push_back({{"gamma", clustering_to_json(gamma)}, {"network", graph_to_json(*found)}});
    } catch (const SolverRefusal& e) {
      return make_verdict(Axiom::richness, m, Outcome::inconclusive, probes, e.what(),
                          {{"check", "richness_open"}, {"gamma", clustering_to_json(gamma)}});
    }
  }
  return make_verdict(Axiom::richness, m, Outcome::witness_verified, probes,
                      "witness found for all " + std::to_string(samples.size()) + " sampled clusterings",
                      {{"check", "richness_witness"}, {"witnesses", witnesses}});
}

// Consistency.

Axiom axiom_for(ConsistencyMode mode) {
  switch (mode) {
    case ConsistencyMode::standard: return Axiom::standard_consistency;
    case ConsistencyMode::refinement: return Axiom::refinement_consistency;
    case ConsistencyMode::interedge: return Axiom::interedge_consistency;
  }
  return Axiom::standard_consistency;
}

namespace {

std::string mode_name(ConsistencyMode mode) {
  switch (mode) {
    case ConsistencyMode::standard: return "standard";
    case ConsistencyMode::refinement: return "refinement";
    case ConsistencyMode::interedge: return "interedge";
  }
  return "?";
}

nlohmann::json consistency_evidence(ConsistencyMode mode, const ProbeNetwork& base, const Clustering& baseline,
                                    const std::vector<Perturbation>& steps, const ProbeNetwork& perturbed,
                                    const OptimaSet& after, bool refinement) {
  return {{"check", "consistency"},
          {"mode", mode_name(mode)},
          {"network", probe_network_to_json(base)},
          {"baseline", clustering_to_json(baseline)},
          {"steps", steps_json(steps)},
          {"perturbed_network", probe_network_to_json(perturbed)},
          {"perturbed_outputs", clusterings_json(after)},
          {"semantics", refinement ? "refinement" : "equality"}};
}

}  // namespace

AxiomVerdict check_consistency(const MethodSpec& m, const ProbeNetwork& p, ConsistencyMode mode,
                               const ProbeBudget& budget) {
  const Axiom axiom = axiom_for(mode);
  const bool interedge_only = mode == ConsistencyMode::interedge;
  std::size_t probes = 0;
  try {
    const OptimaSet before = run_on(m, p);
    Rng rng(budget.seed);
    const auto probe = [&](const Clustering& baseline, const std::vector<Perturbation>& steps)
        -> std::optional<AxiomVerdict> {
      ++probes;
      Graph g2 = apply_perturbations(p.graph, baseline, steps);
      const OptimaSet after = run_method(m, g2);
      const bool refinement = mode == ConsistencyMode::refinement && has_addition(steps);
      if (survives(after, baseline, refinement)) return std::nullopt;
      return make_verdict(axiom, m, Outcome::counterexample_found, probes,
                          p.label + ": output " + describe(baseline) + " does not survive " +
                              std::to_string(steps.size()) + " perturbation(s)",
                          consistency_evidence(mode, p, baseline, steps, ProbeNetwork::of(p.label + "'", g2), after,
                                               refinement));
    };
    const Clustering& first = before.clusterings.front();
    for (const auto& single : single_perturbations(p.graph, first, interedge_only)) {
      if (probes >= budget.probes) break;
      if (auto v = probe(first, {single})) return *v;
    }
    while (probes < budget.probes && budget.max_sequence >= 2) {
      const Clustering& baseline = before.clusterings[rng.below(before.clusterings.size())];
      const auto length = static_cast<std::size_t>(rng.between(2, budget.max_sequence));
      std::vector<Perturbation> steps;
      Graph current = p.graph;
      for (std::size_t i = 0; i < length; ++i) {
        const auto options = single_perturbations(current, baseline, interedge_only);
        if (options.empty()) break;
        steps.push_back(options[rng.below(options.size())]);
        current = apply_perturbations(current, baseline, {steps.back()});
      }
      if (steps.size() < 2) break;
      if (auto v = probe(baseline, steps)) return *v;
    }
  } catch (const SolverRefusal& e) {
    return make_verdict(axiom, m, Outcome::inconclusive, probes, p.label + ": " + e.what());
  }
  return make_verdict(axiom, m, Outcome::pass_all_probes, probes,
                      p.label + ": " + std::to_string(probes) + " " + mode_name(mode) + " probes passed");
}

AxiomVerdict check_consistency(const MethodSpec& m, const std::vector<ProbeNetwork>& networks, ConsistencyMode mode,
                               const ProbeBudget& budget) {
  const Axiom axiom = axiom_for(mode);
  if (networks.empty()) return make_verdict(axiom, m, Outcome::inconclusive, 0, "no probe networks");
  std::size_t probes = 0;
  bool open = false;
  std::string open_reason;
  for (std::size_t i = 0; i < networks.size() && probes < budget.probes; ++i) {
    const std::size_t share = (budget.probes - probes + (networks.size() - i) - 1) / (networks.size() - i);
    ProbeBudget part = budget;
    part.probes = share;
    part.seed = derive_seed(budget.seed, i);
    AxiomVerdict v = check_consistency(m, networks[i], mode, part);
    probes += v.probes;
    if (v.outcome == Outcome::counterexample_found) {
      v.probes = probes;
      return v;
    }
    if (v.outcome == Outcome::inconclusive && !open) {
      open = true;
      open_reason = v.summary;
    }
  }
  if (open) return make_verdict(axiom, m, Outcome::inconclusive, probes, open_reason);
  return make_verdict(axiom, m, Outcome::pass_all_probes, probes,
                      std::to_string(probes) + " " + mode_name(mode) + " probes on " +
                          std::to_string(networks.size()) + " networks passed");
}

AxiomVerdict check_consistency_scripted(const MethodSpec& m, const ScriptedProbe& probe, ConsistencyMode mode) {
  const Axiom axiom = axiom_for(mode);
  try {
    const OptimaSet before = run_on(m, probe.base);
    const auto steps = edge_difference(probe.base.graph, probe.perturbed.graph);
    if (steps.empty()) return make_verdict(axiom, m, Outcome::inconclusive, 0, probe.label + ": empty perturbation");
    if (mode == ConsistencyMode::interedge && has_addition(steps)) {
      return make_verdict(axiom, m, Outcome::inconclusive, 0, probe.label + ": inter-edge probes may only remove edges");
    }
    std::vector<Clustering> applicable;
    for (const auto& c : before.clusterings) {
      try {
        if (apply_perturbations(probe.base.graph, c, steps) == probe.perturbed.graph) applicable.push_back(c);
      } catch (const std::invalid_argument&) {
      }
    }
    if (applicable.empty()) {
      return make_verdict(axiom, m, Outcome::inconclusive, 0,
                          probe.label + ": the edge difference is not a valid perturbation of any baseline output");
    }
    const OptimaSet after = run_on(m, probe.perturbed);
    const bool refinement = mode == ConsistencyMode::refinement && has_addition(steps);
    for (const auto& c : applicable) {
      if (!survives(after, c, refinement)) {
        return make_verdict(axiom, m, Outcome::counterexample_found, 1,
                            probe.label + ": output " + describe(c) + " does not survive " +
                                std::to_string(steps.size()) + " perturbation(s)",
                            consistency_evidence(mode, probe.base, c, steps, probe.perturbed, after, refinement));
      }
    }
    return make_verdict(axiom, m, Outcome::pass_all_probes, 1, probe.label + ": output survives");
  } catch (const SolverRefusal& e) {
    return make_verdict(axiom, m, Outcome::inconclusive, 0, probe.label + ": " + e.what());
  }
}

// Connectivity.

ConnectivityFunction reference_connectivity_function() {
  return {"max(0, floor(log2 n) - 2)", [](std::size_t n) -> std::int64_t {
            if (n == 0) return 0;
            const int lg = std::bit_width(n) - 1;
            return std::max(0, lg - 2);
          }};
}

ConnectivityFunction cpm_connectivity_function(const Rational& gamma) {
  return {"ceil(" + to_string(gamma) + " (n - 1)) - 1",
          [gamma](std::size_t n) -> std::int64_t { return n == 0 ? 0 : cpm_connectivity_ceiling(gamma, n) - 1; }};
}

AxiomVerdict check_connectivity(const MethodSpec& m, const ConnectivityFunction& f,
                                const std::vector<ProbeNetwork>& samples, CutComparison cmp) {
  std::size_t probes = 0;
  std::string open_reason;
  for (const auto& p : samples) {
    OptimaSet out;
    try {
      out = run_on(m, p);
    } catch (const SolverRefusal& e) {
      if (open_reason.empty()) open_reason = p.label + ": " + e.what();
      continue;
    }
    for (const auto& c : out.clusterings) {
      for (const auto& cluster : c.clusters()) {
        if (cluster.size() < 2) continue;
        ++probes;
        const std::int64_t cut = is_connected_subset(p.graph, cluster)
                                     ? static_cast<std::int64_t>(min_cut(p.graph, cluster))
                                     : 0;
        const std::int64_t bound = f.f(cluster.size());
        const bool ok = cmp == CutComparison::strict ? cut > bound : cut >= bound;
        if (!ok) {
          return make_verdict(Axiom::connectivity, m, Outcome::counterexample_found, probes,
                              p.label + ": cluster of " + std::to_string(cluster.size()) + " vertices has min cut " +
                                  std::to_string(cut) + ", f(n) = " + std::to_string(bound),
                              {{"check", "connectivity"},
                               {"network", probe_network_to_json(p)},
                               {"clustering", clustering_to_json(c)},
                               {"cluster", cluster},
                               {"min_cut", cut},
                               {"f", f.name},
                               {"f_value", bound},
                               {"comparison", cmp == CutComparison::strict ? "strict" : "weak"}});
        }
      }
    }
  }
  if (!open_reason.empty()) return make_verdict(Axiom::connectivity, m, Outcome::inconclusive, probes, open_reason);
  return make_verdict(Axiom::connectivity, m, Outcome::pass_all_probes, probes,
                      std::to_string(probes) + " clusters on " + std::to_string(samples.size()) +
                          " networks are well connected under f = " + f.name);
}

// Pair-of-Cliques.

std::size_t cpm_pair_of_cliques_threshold(const Rational& gamma) {
  for (std::size_t n = 2;; ++n) {
    if (gamma * Rational(2 * n - 1) > 1) return n;
  }
}

namespace {

AxiomVerdict pair_of_cliques_over(const MethodSpec& m, const std::vector<std::size_t>& schedule,
                                  const std::function<NetworkRecipe(std::size_t)>& network_for,
                                  std::optional<std::size_t> claimed_n0, const std::string& context_name) {
  if (schedule.empty()) return make_verdict(Axiom::pair_of_cliques, m, Outcome::inconclusive, 0, "empty schedule");
  std::vector<std::size_t> sizes = schedule;
  std::sort(sizes.begin(), sizes.end());
  nlohmann::json rows = nlohmann::json::array();
  std::vector<bool> success;
  std::optional<AxiomVerdict> first_failure;
  std::optional<AxiomVerdict> last_failure;
  for (std::size_t n : sizes) {
    const NetworkRecipe recipe = network_for(n);
    const ProbeNetwork p = ProbeNetwork::of("pair_of_cliques(" + std::to_string(n) + ") + " + context_name, recipe);
    OptimaSet out;
    try {
      out = run_on(m, p);
    } catch (const SolverRefusal& e) {
      return make_verdict(Axiom::pair_of_cliques, m, Outcome::inconclusive, success.size(), p.label + ": " + e.what());
    }
    const VertexSet a = range_set(0, n);
    const VertexSet b = range_set(n, 2 * n);
    std::size_t hits = 0;
    for (const auto& c : out.clusterings) hits += (c.contains_cluster(a) && c.contains_cluster(b)) ? 1 : 0;
    const bool all = hits == out.clusterings.size();
    success.push_back(all);
    rows.push_back({{"n", n}, {"in_every_output", all}, {"in_some_output", hits > 0}});
    if (!all) {
      AxiomVerdict v = make_verdict(Axiom::pair_of_cliques, m, Outcome::counterexample_found, 0,
                                    p.label + ": A and B are not both clusters of every output",
                                    {{"check", "pair_of_cliques"},
                                     {"n", n},
                                     {"network", probe_network_to_json(p)},
                                     {"outputs", clusterings_json(out)}});
      if (!first_failure && (!claimed_n0 || n >= *claimed_n0)) first_failure = v;
      last_failure = v;
    }
  }
  std::optional<std::size_t> found_n0;
  for (std::size_t i = sizes.size(); i-- > 0;) {
    if (!success[i]) break;
    found_n0 = sizes[i];
  }
  const auto finish = [&](AxiomVerdict v) {
    v.probes = sizes.size();
    v.evidence["schedule"] = rows;
    if (claimed_n0) v.evidence["claimed_n0"] = *claimed_n0;
    if (found_n0) v.evidence["observed_n0"] = *found_n0;
    return v;
  };
  if (claimed_n0) {
    if (first_failure) return finish(*first_failure);
  } else if (!success.back()) {
    return finish(*last_failure);
  }
  nlohmann::json evidence = {{"check", "pair_of_cliques_pass"}};
  return finish(make_verdict(Axiom::pair_of_cliques, m, Outcome::pass_all_probes, 0,
                             "A and B returned for every scheduled n >= " +
                                 std::to_string(claimed_n0 ? *claimed_n0 : found_n0.value_or(sizes.back())) +
                                 " with context " + context_name,
                             evidence));
}

}  // namespace

AxiomVerdict check_pair_of_cliques(const MethodSpec& m, const std::vector<std::size_t>& schedule,
                                   const std::optional<NetworkRecipe>& context, std::optional<std::size_t> claimed_n0) {
  std::string name = "nothing";
  if (context) name = recipe_to_json(*context).dump();
  return pair_of_cliques_over(
      m, schedule,
      [&](std::size_t n) {
        NetworkRecipe r{{ComponentRecipe::pair_of_cliques(n)}};
        if (context) r.components.insert(r.components.end(), context->components.begin(), context->components.end());
        return r;
      },
      claimed_n0, name);
}

AxiomVerdict check_pair_of_cliques_clique_context(const MethodSpec& m, const std::vector<std::size_t>& schedule) {
  return pair_of_cliques_over(
      m, schedule,
      [](std::size_t n) {
        const std::size_t e = n * (n - 1) / 2;
        return NetworkRecipe{{ComponentRecipe::pair_of_cliques(n), ComponentRecipe::clique(2 * e + 1)}};
      },
      std::nullopt, "clique(2e+1)");
}

// Fixed point.

AxiomVerdict check_fixed_point(const MethodSpec& m, const std::vector<ProbeNetwork>& samples,
                               std::size_t subset_budget, std::uint64_t seed) {
  constexpr std::size_t outputs_per_sample = 3;
  Rng rng(seed);
  std::size_t probes = 0;
  std::string open_reason;
  for (const auto& p : samples) {
    OptimaSet out;
    try {
      out = run_on(m, p);
    } catch (const SolverRefusal& e) {
      if (open_reason.empty()) open_reason = p.label + ": " + e.what();
      continue;
    }
    const std::size_t outputs = std::min(out.clusterings.size(), outputs_per_sample);
    for (std::size_t oi = 0; oi < outputs; ++oi) {
      const Clustering& c = out.clusterings[oi];
      std::vector<std::vector<std::size_t>> subsets;
      for (std::size_t i = 0; i < c.size(); ++i) subsets.push_back({i});
      if (c.size() >= 2) {
        for (std::size_t t = 0; t < subset_budget; ++t) {
          std::vector<std::size_t> pick;
          for (std::size_t i = 0; i < c.size(); ++i) {
            if (rng.below(2)) pick.push_back(i);
          }
          if (pick.size() >= 2) subsets.push_back(std::move(pick));
        }
      }
      for (const auto& subset : subsets) {
        std::vector<VertexSet> chosen;
        VertexSet members;
        for (std::size_t i : subset) {
          chosen.push_back(c.clusters()[i]);
          members = join(members, c.clusters()[i]);
        }
        if (m.is_optimizer() && members.size() > m.limits.max_component_vertices && subset.size() > 1) continue;
        ++probes;
        const InducedSubgraph h = induced_subgraph(p.graph, members);
        const Clustering restricted = h.to_local(Clustering(chosen));
        OptimaSet again;
        try {
          again = run_method(m, h.graph);
        } catch (const SolverRefusal& e) {
          if (open_reason.empty()) open_reason = p.label + ": " + e.what();
          continue;
        }
        if (!again.contains(restricted)) {
          return make_verdict(Axiom::fixed_point, m, Outcome::counterexample_found, probes,
                              p.label + ": re-clustering " + std::to_string(subset.size()) +
                                  " output cluster(s) on their induced subgraph changes them",
                              {{"check", "fixed_point"},
                               {"network", probe_network_to_json(p)},
                               {"clustering", clustering_to_json(c)},
                               {"subset", chosen},
                               {"induced_graph", graph_to_json(h.graph)},
                               {"induced_outputs", clusterings_json(again)}});
        }
      }
    }
  }
  if (!open_reason.empty()) return make_verdict(Axiom::fixed_point, m, Outcome::inconclusive, probes, open_reason);
  return make_verdict(Axiom::fixed_point, m, Outcome::pass_all_probes, probes,
                      std::to_string(probes) + " induced re-clusterings on " + std::to_string(samples.size()) +
                          " networks reproduced their clusters");
}

AxiomVerdict combine_verdicts(Axiom axiom, const MethodSpec& m, const std::vector<AxiomVerdict>& parts) {
  std::size_t probes = 0;
  nlohmann::json summaries = nlohmann::json::array();
  for (const auto& p : parts) {
    probes += p.probes;
    summaries.push_back({{"outcome", to_string(p.outcome)}, {"summary", p.summary}});
  }
  const auto pick = [&](auto pred) -> std::optional<AxiomVerdict> {
    for (const auto& p : parts) {
      if (pred(p.outcome)) return p;
    }
    return std::nullopt;
  };
  std::optional<AxiomVerdict> decisive = pick(refutes_axiom);
  if (!decisive) decisive = pick([](Outcome o) { return o == Outcome::inconclusive; });
  if (!decisive) decisive = pick([](Outcome o) { return o == Outcome::pass_all_probes; });
  if (!decisive) decisive = pick([](Outcome) { return true; });
  if (!decisive) return make_verdict(axiom, m, Outcome::inconclusive, 0, "no checks were run");
  AxiomVerdict out = *decisive;
  out.axiom = axiom;
  out.method = m;
  out.probes = probes;
  out.evidence["parts"] = summaries;
  return out;
}

// Closed-form checks.

namespace {

Rational cluster_q(const Graph& g, const VertexSet& s) {
  return modularity_term(internal_edges(g, s), degree_sum(g, s), g.edge_count());
}

Rational clustering_q(const Graph& g, const std::vector<VertexSet>& blocks) {
  Rational q = 0;
  for (const auto& b : blocks) q += cluster_q(g, b);
  return q;
}

}  // namespace

OptionInequalityReport verify_option_inequalities(std::size_t n, std::size_t total_edges) {
  if (n < 3) throw std::invalid_argument("option inequalities need n >= 3");
  const std::size_t own = n * n - n + 1;
  if (total_edges < own) throw std::invalid_argument("total edge count is below the pair-of-cliques edge count");
  Graph g = pair_of_cliques(n);
  if (total_edges > own) g = disjoint_union(g, path(total_edges - own + 1));

  const Rational big_e(total_edges);
  const Rational nn(n);
  const VertexSet a = range_set(0, n);
  const VertexSet b = range_set(n, 2 * n);
  const VertexSet a0 = range_set(1, n);
  const VertexSet b0 = range_set(n + 1, 2 * n);
  const VertexSet a_bridge = range_set(0, 1);
  const VertexSet b_bridge = range_set(n, n + 1);

  OptionInequalityReport r{n, total_edges, {}, {}};
  {
    InequalityCheck c{"options_1_3", 0, false, 0, false};
    c.closed_form_margin =
        4 * big_e * (nn - 1) - (2 * nn * (nn - 1) * (nn - 1) - (nn + 1) * (nn + 1) + nn * nn);
    c.direct_margin = cluster_q(g, a) - cluster_q(g, a0) - cluster_q(g, a_bridge);
    r.checks.push_back(c);
  }
  {
    InequalityCheck c{"option_4", 0, false, 0, false};
    c.closed_form_margin = 4 * big_e - (2 * nn * nn - nn + 6 + Rational(1) / (nn - 2));
    c.direct_margin = cluster_q(g, a) - cluster_q(g, a0) - cluster_q(g, join(a_bridge, b_bridge));
    r.checks.push_back(c);
  }
  {
    InequalityCheck c{"options_5_6", 0, false, 0, false};
    c.closed_form_margin = 2 * nn * nn - 10 * nn - 6 - Rational(18) / (nn - 2);
    c.direct_margin = cluster_q(g, a) + cluster_q(g, b) - cluster_q(g, join(a, b_bridge)) - cluster_q(g, b0);
    r.checks.push_back(c);
  }
  for (auto& c : r.checks) {
    c.closed_form_holds = c.closed_form_margin > 0;
    c.direct_holds = c.direct_margin > 0;
  }
  const Rational split = clustering_q(g, {a, b});
  const std::vector<std::vector<VertexSet>> options = {
      {a0, a_bridge, b0, b_bridge}, {a0, a_bridge, b},          {a, b0, b_bridge},
      {a0, b0, join(a_bridge, b_bridge)}, {join(a, b_bridge), b0}, {a0, join(b, a_bridge)},
  };
  for (const auto& o : options) r.option_gaps.push_back(split - clustering_q(g, o));
  return r;
}

nlohmann::json option_report_to_json(const OptionInequalityReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"closed_form_margin", rational_to_json(c.closed_form_margin)},
                      {"closed_form_holds", c.closed_form_holds},
                      {"direct_margin", rational_to_json(c.direct_margin)},
                      {"direct_holds", c.direct_holds}});
  }
  nlohmann::json gaps = nlohmann::json::array();
  for (const auto& gap : r.option_gaps) gaps.push_back(rational_to_json(gap));
  return {{"n", r.n}, {"total_edges", r.total_edges}, {"checks", checks}, {"option_gaps", gaps}};
}

InteredgeSignReport verify_interedge_signs(std::size_t e) {
  if (e < 2) throw std::invalid_argument("inter-edge check needs e >= 2");
  const std::size_t n = clique_size_for_edges(e);
  const Graph g1 = n >= 2 ? pair_of_cliques(n) : path(2 * e + 2);
  const std::size_t first_module = edge_budget_module(e * e).vertex_count();
  const Graph g0 = bridged_modules(e * e, e * e - 1);
  const Graph g = disjoint_union(g1, g0);
  const std::size_t offset = g1.vertex_count();

  InteredgeSignReport r;
  r.e = e;
  r.total_edges = g.edge_count();
  const VertexSet whole = range_set(offset, offset + g0.vertex_count());
  const VertexSet left = range_set(offset, offset + first_module);
  const VertexSet right = range_set(offset + first_module, offset + g0.vertex_count());
  r.closed_form = delta_q_interedge(e, r.total_edges);
  r.direct = cluster_q(g, whole) - cluster_q(g, left) - cluster_q(g, right);
  r.pair_gain = delta_q_pair(e, r.total_edges);
  r.pair_gain_after_removal = delta_q_pair(e, r.total_edges - 1);
  const BigInt e2 = BigInt(e) * BigInt(e);
  r.threshold_holds = Rational(r.total_edges) < Rational(2 * e2 * e2 - 2 * e2) - Rational(1, 2);
  return r;
}

nlohmann::json interedge_report_to_json(const InteredgeSignReport& r) {
  return {{"e", r.e},
          {"total_edges", r.total_edges},
          {"closed_form", rational_to_json(r.closed_form)},
          {"direct", rational_to_json(r.direct)},
          {"pair_gain", rational_to_json(r.pair_gain)},
          {"pair_gain_after_removal", rational_to_json(r.pair_gain_after_removal)},
          {"threshold_holds", r.threshold_holds}};
}

}  // namespace axlab
