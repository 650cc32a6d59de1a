#include "axlab/methods.hpp"

#include <algorithm>

namespace axlab {

MethodSpec MethodSpec::components() { return {}; }

MethodSpec MethodSpec::nodes() {
  MethodSpec m;
  m.kind = Kind::nodes_are_clusters;
  return m;
}

MethodSpec MethodSpec::modularity() {
  MethodSpec m;
  m.kind = Kind::modularity_opt;
  return m;
}

MethodSpec MethodSpec::cpm(Rational gamma) {
  MethodSpec m;
  m.kind = Kind::cpm_opt;
  m.gamma = Objective::cpm(std::move(gamma)).gamma;
  return m;
}

MethodSpec MethodSpec::ikc(std::size_t k0, bool modularity_filter) {
  MethodSpec m;
  m.kind = Kind::ikc;
  m.k0 = k0;
  m.modularity_filter = modularity_filter;
  return m;
}

Objective MethodSpec::objective() const {
  switch (kind) {
    case Kind::modularity_opt: return Objective::modularity();
    case Kind::cpm_opt: return Objective::cpm(gamma);
    default: throw std::logic_error(name() + " is not an optimization method");
  }
}

std::string MethodSpec::name() const {
  switch (kind) {
    case Kind::components_are_clusters: return "Components";
    case Kind::nodes_are_clusters: return "Nodes";
    case Kind::modularity_opt: return "Modularity";
    case Kind::cpm_opt: return "CPM(" + to_string(gamma) + ")";
    case Kind::ikc: {
      std::string base = modularity_filter ? "IKC" : "IKC(no-mod)";
      if (k0 > 0) base += "[k0=" + std::to_string(k0) + "]";
      return base;
    }
  }
  return "?";
}

nlohmann::json method_to_json(const MethodSpec& m) {
  nlohmann::json j;
  switch (m.kind) {
    case MethodSpec::Kind::components_are_clusters: j["kind"] = "components_are_clusters"; break;
    case MethodSpec::Kind::nodes_are_clusters: j["kind"] = "nodes_are_clusters"; break;
    case MethodSpec::Kind::modularity_opt: j["kind"] = "modularity_opt"; break;
    case MethodSpec::Kind::cpm_opt:
      j["kind"] = "cpm_opt";
      j["gamma"] = to_string(m.gamma);
      break;
    case MethodSpec::Kind::ikc:
      j["kind"] = "ikc";
      j["k0"] = m.k0;
      j["modularity_filter"] = m.modularity_filter;
      if (m.ikc_base == IkcBase::residual) j["ikc_base"] = "residual";
      break;
  }
  if (m.is_optimizer()) j["limit_vertices"] = m.limits.max_component_vertices;
  return j;
}

MethodSpec method_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  MethodSpec m;
  if (kind == "components_are_clusters" || kind == "components") {
    m = MethodSpec::components();
  } else if (kind == "nodes_are_clusters" || kind == "nodes") {
    m = MethodSpec::nodes();
  } else if (kind == "modularity_opt" || kind == "modularity") {
    m = MethodSpec::modularity();
  } else if (kind == "cpm_opt" || kind == "cpm") {
    if (!j.contains("gamma")) throw std::invalid_argument("cpm needs a gamma");
    m = MethodSpec::cpm(rational_from_json(j.at("gamma")));
  } else if (kind == "ikc" || kind == "ikc_no_mod") {
    m = MethodSpec::ikc(j.value("k0", std::size_t{0}), j.value("modularity_filter", kind == "ikc"));
    const auto base = j.value("ikc_base", std::string("original"));
    if (base == "residual") {
      m.ikc_base = IkcBase::residual;
    } else if (base != "original") {
      throw std::invalid_argument("unknown ikc_base '" + base + "'");
    }
  } else {
    throw std::invalid_argument("unknown method kind '" + kind + "'");
  }
  if (j.contains("limit_vertices")) m.limits.max_component_vertices = j["limit_vertices"].get<std::size_t>();
  return m;
}

OptimaSet run_method(const MethodSpec& m, const Graph& g) {
  switch (m.kind) {
    case MethodSpec::Kind::components_are_clusters:
      return {std::nullopt, std::nullopt, {Clustering(connected_components(g))}};
    case MethodSpec::Kind::nodes_are_clusters:
      return {std::nullopt, std::nullopt, {Clustering::singletons(g.vertex_count())}};
    case MethodSpec::Kind::modularity_opt:
    case MethodSpec::Kind::cpm_opt:
      return brute_force_optimum(g, m.objective(), m.limits);
    case MethodSpec::Kind::ikc:
      return {std::nullopt, std::nullopt, {ikc_run(g, m.k0, m.modularity_filter, m.ikc_base)}};
  }
  throw std::logic_error("unhandled method kind");
}

OptimaSet run_method(const MethodSpec& m, const NetworkRecipe& recipe) {
  if (m.kind == MethodSpec::Kind::modularity_opt && structured_supports(recipe, m.objective())) {
    return structured_optimum(recipe, m.objective(), m.limits);
  }
  return run_method(m, build(recipe));
}

Clustering ikc_run(const Graph& g, std::size_t k0, bool modularity_filter, IkcBase base) {
  const std::size_t floor = std::max<std::size_t>(k0, 1);
  std::vector<char> alive(g.vertex_count(), 1);
  std::vector<VertexSet> clusters;
  const auto emit_singletons = [&](std::span<const Vertex> vs) {
    for (Vertex v : vs) clusters.push_back({v});
  };
  while (true) {
    VertexSet remaining;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (alive[v]) remaining.push_back(v);
    }
    if (remaining.empty()) break;
    const InducedSubgraph work = induced_subgraph(g, remaining);
    const std::size_t k = degeneracy(work.graph);
    if (work.graph.edge_count() == 0 || k < floor) {
      emit_singletons(remaining);
      break;
    }
    for (const auto& core : k_core(work.graph, k)) {
      VertexSet members;
      for (Vertex local : core) members.push_back(work.original[local]);
      std::sort(members.begin(), members.end());
      bool accept = true;
      if (modularity_filter) {
        const Rational q = base == IkcBase::original
                               ? modularity_term(internal_edges(g, members), degree_sum(g, members), g.edge_count())
                               : modularity_term(internal_edges(work.graph, core), degree_sum(work.graph, core),
                                                 work.graph.edge_count());
        accept = q > 0;
      }
      if (accept) {
        clusters.push_back(members);
      } else {
        emit_singletons(members);
      }
      for (Vertex v : members) alive[v] = 0;
    }
  }
  return Clustering(std::move(clusters));
}

}  // namespace axlab
