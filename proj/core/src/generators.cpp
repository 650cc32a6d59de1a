#include "axlab/generators.hpp"

#include <algorithm>
#include <map>

#include "axlab/random.hpp"

namespace axlab {

namespace {

const std::map<ComponentKind, std::string>& kind_names() {
  static const std::map<ComponentKind, std::string> names{
      {ComponentKind::clique, "clique"},
      {ComponentKind::star, "star"},
      {ComponentKind::path, "path"},
      {ComponentKind::cycle, "cycle"},
      {ComponentKind::pair_of_cliques, "pair_of_cliques"},
      {ComponentKind::ring_of_cliques, "ring_of_cliques"},
      {ComponentKind::edge_pair, "edge_pair"},
      {ComponentKind::ikc_fig, "ikc_fig"},
      {ComponentKind::edge_budget_module, "edge_budget_module"},
      {ComponentKind::bridged_modules, "bridged_modules"},
  };
  return names;
}

ComponentKind kind_from_string(const std::string& name) {
  for (const auto& [kind, text] : kind_names()) {
    if (text == name) return kind;
  }
  throw std::invalid_argument("unknown component kind '" + name + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

std::string to_string(ComponentKind kind) { return kind_names().at(kind); }

std::string to_string(IkcFigure fig) {
  switch (fig) {
    case IkcFigure::n1: return "N1";
    case IkcFigure::n1_prime: return "N1'";
    case IkcFigure::n2: return "N2";
    case IkcFigure::n2_prime: return "N2'";
    case IkcFigure::n3: return "N3";
    case IkcFigure::n3_prime: return "N3'";
  }
  return "?";
}

IkcFigure ikc_figure_from_string(const std::string& name) {
  for (auto fig : {IkcFigure::n1, IkcFigure::n1_prime, IkcFigure::n2, IkcFigure::n2_prime, IkcFigure::n3,
                   IkcFigure::n3_prime}) {
    std::string canonical = to_string(fig);
    std::string alias = canonical;
    if (alias.back() == '\'') alias = alias.substr(0, alias.size() - 1) + "_prime";
    if (name == canonical || name == alias) return fig;
  }
  throw std::invalid_argument("unknown IKC figure '" + name + "'");
}

ComponentRecipe ComponentRecipe::clique(std::size_t n) { return {.kind = ComponentKind::clique, .n = n}; }
ComponentRecipe ComponentRecipe::star(std::size_t p) { return {.kind = ComponentKind::star, .p = p}; }
ComponentRecipe ComponentRecipe::path(std::size_t n) { return {.kind = ComponentKind::path, .n = n}; }
ComponentRecipe ComponentRecipe::cycle(std::size_t n) { return {.kind = ComponentKind::cycle, .n = n}; }
ComponentRecipe ComponentRecipe::pair_of_cliques(std::size_t n) {
  return {.kind = ComponentKind::pair_of_cliques, .n = n};
}
ComponentRecipe ComponentRecipe::ring_of_cliques(std::size_t m, std::size_t n) {
  return {.kind = ComponentKind::ring_of_cliques, .n = n, .m = m};
}
ComponentRecipe ComponentRecipe::edge_pair() { return {.kind = ComponentKind::edge_pair}; }
ComponentRecipe ComponentRecipe::ikc_fig(IkcFigure which) { return {.kind = ComponentKind::ikc_fig, .figure = which}; }
ComponentRecipe ComponentRecipe::edge_budget_module(std::size_t edges) {
  return {.kind = ComponentKind::edge_budget_module, .edges = edges};
}
ComponentRecipe ComponentRecipe::bridged_modules(std::size_t edges, std::size_t partner_edges) {
  return {.kind = ComponentKind::bridged_modules, .edges = edges, .partner_edges = partner_edges};
}

Graph clique(std::size_t n) {
  require(n >= 1, "clique needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph p_star(std::size_t p) {
  require(p >= 1, "star needs p >= 1");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= p; ++leaf) edges.emplace_back(0, leaf);
  return Graph(p + 1, std::move(edges));
}

Graph pair_of_cliques(std::size_t n) {
  require(n >= 2, "pair_of_cliques needs n >= 2");
  Graph both = disjoint_union(clique(n), clique(n));
  return both.with_edge_added(0, static_cast<Vertex>(n));
}

Graph ring_of_cliques(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 3, "ring_of_cliques needs m >= 3 and n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    auto base = static_cast<Vertex>(i * n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(base + u, base + v);
    }
    auto next = static_cast<Vertex>(((i + 1) % m) * n);
    edges.emplace_back(base + 1, next);
  }
  return Graph(m * n, std::move(edges));
}

Graph edge_budget_module(std::size_t edge_count) {
  require(edge_count >= 1, "edge_budget_module needs at least one edge");
  std::size_t m = 2;
  while (choose2(m) < edge_count) ++m;
  const std::size_t floor = edge_count >= 3 ? 2 : 1;

  std::vector<Edge> edges = clique(m).edges();
  std::vector<std::size_t> deg(m, m - 1);
  std::size_t surplus = edges.size() - edge_count;
  // Walk candidates from the highest-index edge down.
  for (std::size_t idx = edges.size(); idx-- > 0 && surplus > 0;) {
    Edge e = edges[idx];
    if (deg[e.u] <= floor || deg[e.v] <= floor) continue;
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(idx));
    if (connected_components(Graph(m, trial)).size() != 1) continue;
    edges = std::move(trial);
    --deg[e.u];
    --deg[e.v];
    --surplus;
  }
  if (surplus != 0) {
    throw std::logic_error("edge_budget_module could not reach " + std::to_string(edge_count) + " edges");
  }
  return Graph(m, std::move(edges));
}

Graph bridged_modules(std::size_t edges_a, std::size_t edges_b) {
  Graph a = edge_budget_module(edges_a);
  Graph both = disjoint_union(a, edge_budget_module(edges_b));
  return both.with_edge_added(0, static_cast<Vertex>(a.vertex_count()));
}

Graph ikc_fig_network(IkcFigure which) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  switch (which) {
    case IkcFigure::n1:
    case IkcFigure::n1_prime:
      // Figure vertices 1..6 are 0..5 here.
      n = 6;
      for (Vertex v = 0; v < 6; ++v) edges.emplace_back(v, (v + 1) % 6);
      if (which == IkcFigure::n1_prime) edges.insert(edges.end(), {{0, 2}, {0, 3}, {1, 3}});
      break;
    case IkcFigure::n2:
    case IkcFigure::n2_prime:
      // Round K4 a..d = 0..3, square e..h = 4..7, connector a-e.
      n = 8;
      edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {0, 4}};
      if (which == IkcFigure::n2_prime) edges.insert(edges.end(), {{4, 6}, {5, 7}});
      break;
    case IkcFigure::n3:
    case IkcFigure::n3_prime:
      // Triangle x,y,z = 0,1,2 with pendants 3,4,5 on x, 6,7 on y, 8,9 on z.
      n = 10;
      edges = {{0, 1}, {0, 2}, {1, 2}};
      if (which == IkcFigure::n3) {
        edges.insert(edges.end(), {{0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {2, 8}, {2, 9}});
      }
      break;
  }
  return disjoint_union(Graph(n, std::move(edges)), clique(2));
}

std::size_t vertex_count(const ComponentRecipe& c) {
  switch (c.kind) {
    case ComponentKind::clique:
    case ComponentKind::path:
    case ComponentKind::cycle: return c.n;
    case ComponentKind::star: return c.p + 1;
    case ComponentKind::pair_of_cliques: return 2 * c.n;
    case ComponentKind::ring_of_cliques: return c.m * c.n;
    case ComponentKind::edge_pair: return 2;
    case ComponentKind::ikc_fig:
    case ComponentKind::edge_budget_module:
    case ComponentKind::bridged_modules: return build(c).vertex_count();
  }
  return 0;
}

Graph build(const ComponentRecipe& c) {
  switch (c.kind) {
    case ComponentKind::clique: return clique(c.n);
    case ComponentKind::star: return p_star(c.p);
    case ComponentKind::path: return path(c.n);
    case ComponentKind::cycle: return cycle(c.n);
    case ComponentKind::pair_of_cliques: return pair_of_cliques(c.n);
    case ComponentKind::ring_of_cliques: return ring_of_cliques(c.m, c.n);
    case ComponentKind::edge_pair: return clique(2);
    case ComponentKind::ikc_fig: return ikc_fig_network(c.figure);
    case ComponentKind::edge_budget_module: return edge_budget_module(c.edges);
    case ComponentKind::bridged_modules: return bridged_modules(c.edges, c.partner_edges);
  }
  throw std::logic_error("unhandled component kind");
}

Graph build(const NetworkRecipe& r) {
  Graph out;
  for (const auto& c : r.components) out = disjoint_union(out, build(c));
  return out;
}

std::vector<std::size_t> component_offsets(const NetworkRecipe& r) {
  std::vector<std::size_t> out;
  std::size_t offset = 0;
  for (const auto& c : r.components) {
    out.push_back(offset);
    offset += vertex_count(c);
  }
  return out;
}

nlohmann::json recipe_to_json(const NetworkRecipe& r) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : r.components) {
    nlohmann::json j{{"kind", to_string(c.kind)}};
    switch (c.kind) {
      case ComponentKind::clique:
      case ComponentKind::path:
      case ComponentKind::cycle:
      case ComponentKind::pair_of_cliques: j["n"] = c.n; break;
      case ComponentKind::star: j["p"] = c.p; break;
      case ComponentKind::ring_of_cliques:
        j["m"] = c.m;
        j["n"] = c.n;
        break;
      case ComponentKind::edge_pair: break;
      case ComponentKind::ikc_fig: j["figure"] = to_string(c.figure); break;
      case ComponentKind::edge_budget_module: j["edges"] = c.edges; break;
      case ComponentKind::bridged_modules:
        j["edges"] = c.edges;
        j["partner_edges"] = c.partner_edges;
        break;
    }
    components.push_back(std::move(j));
  }
  return {{"components", components}};
}

NetworkRecipe recipe_from_json(const nlohmann::json& j) {
  NetworkRecipe r;
  const auto& list = j.is_array() ? j : j.at("components");
  for (const auto& item : list) {
    ComponentRecipe c;
    c.kind = kind_from_string(item.at("kind").get<std::string>());
    auto field = [&](const char* name) -> std::size_t {
      if (!item.contains(name)) {
        throw std::invalid_argument("component '" + to_string(c.kind) + "' needs field '" + name + "'");
      }
      auto value = item.at(name).get<long long>();
      require(value >= 0, std::string("field '") + name + "' must be non-negative");
      return static_cast<std::size_t>(value);
    };
    switch (c.kind) {
      case ComponentKind::clique:
      case ComponentKind::path:
      case ComponentKind::cycle:
      case ComponentKind::pair_of_cliques: c.n = field("n"); break;
      case ComponentKind::star: c.p = field("p"); break;
      case ComponentKind::ring_of_cliques:
        c.m = field("m");
        c.n = field("n");
        break;
      case ComponentKind::edge_pair: break;
      case ComponentKind::ikc_fig: c.figure = ikc_figure_from_string(item.at("figure").get<std::string>()); break;
      case ComponentKind::edge_budget_module: c.edges = field("edges"); break;
      case ComponentKind::bridged_modules:
        c.edges = field("edges");
        c.partner_edges = field("partner_edges");
        break;
    }
    build(c);  // validates parameters
    r.components.push_back(c);
  }
  return r;
}

std::size_t clique_size_for_edges(std::size_t e) {
  for (std::size_t n = 2; choose2(n) <= e; ++n) {
    if (choose2(n) == e) return n;
  }
  return 0;
}

NetworkRecipe context_recipe(ContextVariant variant, std::size_t e) {
  const std::size_t n = clique_size_for_edges(e);
  require(n >= 6, "context networks need e = C(n,2) with n >= 6, got e = " + std::to_string(e));
  NetworkRecipe r{{ComponentRecipe::pair_of_cliques(n)}};
  switch (variant) {
    case ContextVariant::star_context: r.components.push_back(ComponentRecipe::star(2 * e)); break;
    case ContextVariant::clique_context: r.components.push_back(ComponentRecipe::clique(2 * e + 1)); break;
    case ContextVariant::interedge_context:
      r.components.push_back(ComponentRecipe::bridged_modules(e * e, e * e - 1));
      break;
  }
  return r;
}

Graph context_network(ContextVariant variant, std::size_t e) { return build(context_recipe(variant, e)); }

Graph erdos_renyi(std::size_t n, unsigned p_per_mille, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance_per_mille(p_per_mille)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace axlab
