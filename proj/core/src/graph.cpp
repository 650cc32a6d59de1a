#include "axlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace axlab {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(vertex_count) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= vertex_count) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") exceeds vertex count " + std::to_string(vertex_count));
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::with_edge_added(Vertex u, Vertex v) const {
  auto edges = edges_;
  edges.emplace_back(u, v);
  return Graph(vertex_count(), std::move(edges));
}

Graph Graph::with_edge_removed(Vertex u, Vertex v) const {
  Edge target(u, v);
  auto edges = edges_;
  auto it = std::lower_bound(edges.begin(), edges.end(), target);
  if (it == edges.end() || *it != target) {
    throw std::invalid_argument("cannot remove missing edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  edges.erase(it);
  return Graph(vertex_count(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  auto shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace {

// BFS restricted to vertices with allowed[v] set.
VertexSet reach(const Graph& g, Vertex start, const std::vector<char>& allowed, std::vector<char>& seen) {
  VertexSet out{start};
  seen[start] = 1;
  std::queue<Vertex> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
        frontier.push(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const std::vector<char>& allowed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (allowed[v] && !seen[v]) out.push_back(reach(g, v, allowed, seen));
  }
  return out;
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, std::vector<char>(g.vertex_count(), 1));
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  auto in = membership(g, s);
  std::vector<char> seen(g.vertex_count(), 0);
  return reach(g, s.front(), in, seen).size() == s.size();
}

std::vector<VertexSet> k_core(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k_core requires k >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  std::queue<Vertex> doomed;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      alive[v] = 0;
      doomed.push(v);
    }
  }
  while (!doomed.empty()) {
    Vertex v = doomed.front();
    doomed.pop();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < k) {
        alive[w] = 0;
        doomed.push(w);
      }
    }
  }
  return components_within(g, alive);
}

std::size_t degeneracy(const Graph& g) {
  // Matula-Beck peeling: the degeneracy is the largest minimum degree seen.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::size_t result = 0;
  std::size_t d = 0;
  for (std::size_t done = 0; done < n;) {
    d = std::min(d, max_deg);
    while (buckets[d].empty()) ++d;
    Vertex v = buckets[d].back();
    buckets[d].pop_back();
    if (removed[v] || deg[v] != d) continue;  // stale entry
    removed[v] = 1;
    ++done;
    result = std::max(result, d);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) buckets[--deg[w]].push_back(w);
    }
    d = d == 0 ? 0 : d - 1;
  }
  return result;
}

std::size_t min_cut(const Graph& g, std::span<const Vertex> s) {
  if (s.size() < 2) throw std::invalid_argument("min_cut needs a cluster of at least two vertices");
  if (!is_connected_subset(g, s)) throw std::invalid_argument("min_cut needs a connected cluster");

  auto sub = induced_subgraph(g, s);
  const std::size_t n = sub.graph.vertex_count();
  std::vector<std::vector<std::size_t>> w(n, std::vector<std::size_t>(n, 0));
  for (const Edge& e : sub.graph.edges()) w[e.u][e.v] = w[e.v][e.u] = 1;

  // Stoer-Wagner with dense weights; `active` holds merged super-vertices.
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (active.size() > 1) {
    std::vector<std::size_t> key(n, 0);
    std::vector<char> added(n, 0);
    std::size_t prev = active.front();
    std::size_t last = active.front();
    for (std::size_t step = 0; step < active.size(); ++step) {
      std::size_t pick = n;
      for (std::size_t v : active) {
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 == active.size()) best = std::min(best, key[pick]);
      for (std::size_t v : active) {
        if (!added[v]) key[v] += w[pick][v];
      }
    }
    for (std::size_t v : active) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    std::erase(active, last);
  }
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet members = make_vertex_set({s.begin(), s.end()});
  std::vector<Vertex> local(g.vertex_count(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(members[i]) + " out of range");
    }
    local[members[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != std::numeric_limits<Vertex>::max() && local[e.v] != std::numeric_limits<Vertex>::max()) {
      edges.emplace_back(local[e.u], local[e.v]);
    }
  }
  return {Graph(members.size(), std::move(edges)), std::move(members)};
}

Clustering InducedSubgraph::to_parent(const Clustering& local) const {
  std::vector<VertexSet> out;
  for (const auto& c : local.clusters()) {
    VertexSet mapped;
    for (Vertex v : c) mapped.push_back(original.at(v));
    out.push_back(std::move(mapped));
  }
  return Clustering(std::move(out));
}

Clustering InducedSubgraph::to_local(const Clustering& parent) const {
  std::vector<VertexSet> out;
  for (const auto& c : parent.clusters()) {
    VertexSet mapped;
    for (Vertex v : c) {
      auto it = std::lower_bound(original.begin(), original.end(), v);
      if (it == original.end() || *it != v) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not part of the induced subgraph");
      }
      mapped.push_back(static_cast<Vertex>(it - original.begin()));
    }
    out.push_back(std::move(mapped));
  }
  return Clustering(std::move(out));
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n") {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      have_header = true;
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw std::invalid_argument("edge list is missing the 'n <count>' header");
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return Graph(j.at("n").get<std::size_t>(), std::move(edges));
}

}  // namespace axlab
