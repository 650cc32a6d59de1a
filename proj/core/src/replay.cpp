#include "axlab/axioms.hpp"

namespace axlab {

namespace {

std::vector<Clustering> clusterings_from(const nlohmann::json& list) {
  std::vector<Clustering> out;
  for (const auto& c : list) out.push_back(clustering_from_json(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::string replay_richness_witness(const AxiomVerdict& v) {
  for (const auto& w : v.evidence.at("witnesses")) {
    const Clustering gamma = clustering_from_json(w.at("gamma"));
    if (!run_method(v.method, graph_from_json(w.at("network"))).contains(gamma)) {
      return "recorded witness no longer yields " + clustering_to_json(gamma).dump();
    }
  }
  return {};
}

std::string replay_richness_refuted(const AxiomVerdict& v) {
  const Clustering gamma = clustering_from_json(v.evidence.at("gamma"));
  const AxiomVerdict again = check_richness(v.method, {gamma}, gamma.vertex_count());
  if (again.outcome != Outcome::refuted_exhaustively) return "exhaustive search now finds a witness";
  return {};
}

std::string replay_consistency(const AxiomVerdict& v) {
  const auto& ev = v.evidence;
  const ProbeNetwork base = probe_network_from_json(ev.at("network"));
  const ProbeNetwork perturbed = probe_network_from_json(ev.at("perturbed_network"));
  const Clustering baseline = clustering_from_json(ev.at("baseline"));
  std::vector<Perturbation> steps;
  for (const auto& s : ev.at("steps")) steps.push_back(perturbation_from_json(s));
  if (!run_on(v.method, base).contains(baseline)) return "baseline clustering is no longer an output";
  if (apply_perturbations(base.graph, baseline, steps) != perturbed.graph) {
    return "perturbation steps do not produce the recorded perturbed network";
  }
  const OptimaSet after = run_on(v.method, perturbed);
  if (after.clusterings != clusterings_from(ev.at("perturbed_outputs"))) return "perturbed outputs differ";
  const bool refinement = ev.at("semantics").get<std::string>() == "refinement";
  if (refinement ? after.has_refinement_of(baseline) : after.contains(baseline)) {
    return "baseline output survives the perturbation";
  }
  return {};
}

std::string replay_connectivity(const AxiomVerdict& v) {
  const auto& ev = v.evidence;
  const ProbeNetwork p = probe_network_from_json(ev.at("network"));
  const Clustering c = clustering_from_json(ev.at("clustering"));
  const auto cluster = ev.at("cluster").get<VertexSet>();
  if (!run_on(v.method, p).contains(c)) return "clustering is no longer an output";
  if (!c.contains_cluster(cluster)) return "cluster is not part of the clustering";
  const std::int64_t cut =
      is_connected_subset(p.graph, cluster) ? static_cast<std::int64_t>(min_cut(p.graph, cluster)) : 0;
  if (cut != ev.at("min_cut").get<std::int64_t>()) return "min cut differs";
  const auto bound = ev.at("f_value").get<std::int64_t>();
  const bool strict = ev.at("comparison").get<std::string>() == "strict";
  if (strict ? cut > bound : cut >= bound) return "cluster is well connected";
  return {};
}

std::string replay_pair_of_cliques(const AxiomVerdict& v) {
  const auto& ev = v.evidence;
  const ProbeNetwork p = probe_network_from_json(ev.at("network"));
  const auto n = ev.at("n").get<std::size_t>();
  const OptimaSet out = run_on(v.method, p);
  if (out.clusterings != clusterings_from(ev.at("outputs"))) return "outputs differ";
  VertexSet a;
  VertexSet b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(static_cast<Vertex>(i));
    b.push_back(static_cast<Vertex>(n + i));
  }
  for (const auto& c : out.clusterings) {
    if (!c.contains_cluster(a) || !c.contains_cluster(b)) return {};
  }
  return "every output returns A and B";
}

std::string replay_fixed_point(const AxiomVerdict& v) {
  const auto& ev = v.evidence;
  const ProbeNetwork p = probe_network_from_json(ev.at("network"));
  const Clustering c = clustering_from_json(ev.at("clustering"));
  if (!run_on(v.method, p).contains(c)) return "clustering is no longer an output";
  const auto chosen = ev.at("subset").get<std::vector<VertexSet>>();
  VertexSet members;
  for (const auto& s : chosen) {
    if (!c.contains_cluster(s)) return "subset is not made of output clusters";
    members.insert(members.end(), s.begin(), s.end());
  }
  std::sort(members.begin(), members.end());
  const InducedSubgraph h = induced_subgraph(p.graph, members);
  if (h.graph != graph_from_json(ev.at("induced_graph"))) return "induced graph differs";
  const OptimaSet again = run_method(v.method, h.graph);
  if (again.clusterings != clusterings_from(ev.at("induced_outputs"))) return "induced outputs differ";
  if (again.contains(h.to_local(Clustering(chosen)))) return "restriction is reproduced";
  return {};
}

}  // namespace

std::string replay_verdict(const AxiomVerdict& v) {
  const std::string check = v.evidence.is_object() ? v.evidence.value("check", std::string()) : std::string();
  try {
    if (check == "richness_witness") return replay_richness_witness(v);
    if (check == "richness_refuted") return replay_richness_refuted(v);
    if (check == "consistency") return replay_consistency(v);
    if (check == "connectivity") return replay_connectivity(v);
    if (check == "pair_of_cliques") return replay_pair_of_cliques(v);
    if (check == "fixed_point") return replay_fixed_point(v);
  } catch (const std::exception& e) {
    return std::string("replay failed: ") + e.what();
  }
  if (refutes_axiom(v.outcome)) return "refuting verdict carries no replayable evidence";
  return {};
}

}  // namespace axlab
