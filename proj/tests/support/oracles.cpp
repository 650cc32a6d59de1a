#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace axlab::oracle {

namespace {

void extend(std::size_t v, std::size_t n, std::vector<VertexSet>& blocks, std::vector<Clustering>& out) {
  if (v == n) {
    out.emplace_back(blocks);
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(static_cast<Vertex>(v));
    extend(v + 1, n, blocks, out);
    blocks[i].pop_back();
  }
  blocks.push_back({static_cast<Vertex>(v)});
  extend(v + 1, n, blocks, out);
  blocks.pop_back();
}

std::vector<VertexSet> components_of(const Graph& g, const std::vector<bool>& alive) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    if (alive[e.u] && alive[e.v]) parent[find(e.u)] = find(e.v);
  }
  std::vector<VertexSet> groups(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (alive[v]) groups[find(v)].push_back(static_cast<Vertex>(v));
  }
  std::vector<VertexSet> out;
  for (auto& grp : groups) {
    if (!grp.empty()) out.push_back(grp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Clustering> all_partitions(std::size_t n) {
  std::vector<Clustering> out;
  std::vector<VertexSet> blocks;
  if (n == 0) return {Clustering()};
  extend(0, n, blocks, out);
  return out;
}

Rational naive_score(const Graph& g, const Clustering& c, const Objective& objective) {
  const auto label = c.labels();
  std::vector<std::size_t> inside(c.size(), 0);
  std::vector<std::size_t> degrees(c.size(), 0);
  for (const auto& e : g.edges()) {
    if (label[e.u] == label[e.v]) ++inside[label[e.u]];
    ++degrees[label[e.u]];
    ++degrees[label[e.v]];
  }
  Rational total = 0;
  const Rational m = g.edge_count();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (objective.kind == Objective::Kind::modularity) {
      if (m == 0) continue;
      const Rational share = Rational(degrees[i]) / (2 * m);
      total += Rational(inside[i]) / m - share * share;
    } else {
      const Rational n = c.clusters()[i].size();
      total += Rational(inside[i]) - objective.gamma * n * (n - 1) / 2;
    }
  }
  return total;
}

bool clusters_connected(const Graph& g, const Clustering& c) {
  for (const auto& cluster : c.clusters()) {
    std::vector<bool> alive(g.vertex_count(), false);
    for (Vertex v : cluster) alive[v] = true;
    if (components_of(g, alive).size() != 1) return false;
  }
  return true;
}

NaiveOptimum naive_optimum(const Graph& g, const Objective& objective, bool connected_only) {
  NaiveOptimum best;
  bool first = true;
  std::vector<std::pair<Rational, Clustering>> scored;
  for (auto& c : all_partitions(g.vertex_count())) {
    const Rational s = naive_score(g, c, objective);
    if (first || s > best.value) best.value = s;
    first = false;
    scored.emplace_back(s, std::move(c));
  }
  for (auto& [s, c] : scored) {
    if (s == best.value && (!connected_only || clusters_connected(g, c))) best.optima.push_back(c);
  }
  std::sort(best.optima.begin(), best.optima.end());
  return best;
}

std::size_t naive_min_cut(const Graph& g, const std::vector<Vertex>& s) {
  std::size_t best = g.edge_count() + 1;
  const std::size_t k = s.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    if (mask & 1) continue;
    std::vector<int> side(g.vertex_count(), -1);
    for (std::size_t i = 0; i < k; ++i) side[s[i]] = (mask >> i) & 1;
    std::size_t crossing = 0;
    for (const auto& e : g.edges()) {
      if (side[e.u] >= 0 && side[e.v] >= 0 && side[e.u] != side[e.v]) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

std::vector<VertexSet> naive_k_core(const Graph& g, std::size_t k) {
  std::vector<bool> alive(g.vertex_count(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v]) continue;
      std::size_t d = 0;
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) d += alive[u] ? 1 : 0;
      if (d < k) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  return components_of(g, alive);
}

Graph random_graph(std::size_t n, unsigned p_per_mille, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> roll(0, 999);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (roll(rng) < p_per_mille) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

}  // namespace axlab::oracle
