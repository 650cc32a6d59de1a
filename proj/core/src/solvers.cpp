#include "axlab/solvers.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace axlab {

namespace {

using Blocks = std::vector<VertexSet>;

struct ComponentOptima {
  std::int64_t key = 0;
  std::vector<Blocks> options;
};

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

std::vector<Clustering> combine(const std::vector<ComponentOptima>& parts, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& p : parts) {
    if (p.options.empty()) return {};
    if (total > cap / p.options.size()) {
      throw SolverRefusal("optima set exceeds the limit of " + std::to_string(cap) + " clusterings");
    }
    total *= p.options.size();
  }
  std::vector<Clustering> out;
  out.reserve(total);
  std::vector<std::size_t> digit(parts.size(), 0);
  for (std::size_t step = 0; step < total; ++step) {
    Blocks blocks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& chosen = parts[i].options[digit[i]];
      blocks.insert(blocks.end(), chosen.begin(), chosen.end());
    }
    out.emplace_back(std::move(blocks));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (++digit[i] < parts[i].options.size()) break;
      digit[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OptimaSet finish(const Objective& objective, const ScaledObjective& scaled,
                 const std::vector<ComponentOptima>& parts, std::size_t cap) {
  std::int64_t key = 0;
  for (const auto& p : parts) key += p.key;
  return {objective, scaled.to_rational(key), combine(parts, cap)};
}

/// Tracks the best key seen and every option achieving it.
class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  bool wants(std::int64_t key) const { return !any_ || key >= best_; }

  void offer(std::int64_t key, Blocks option) {
    if (!any_ || key > best_) {
      any_ = true;
      best_ = key;
      options_.clear();
      overflow_ = false;
    }
    if (key < best_) return;
    if (options_.size() >= cap_) {
      overflow_ = true;
      return;
    }
    options_.push_back(std::move(option));
  }

  ComponentOptima take() {
    if (overflow_) {
      throw SolverRefusal("optima set exceeds the limit of " + std::to_string(cap_) + " clusterings");
    }
    return {best_, std::move(options_)};
  }

 private:
  std::size_t cap_;
  bool any_ = false;
  bool overflow_ = false;
  std::int64_t best_ = 0;
  std::vector<Blocks> options_;
};

// Brute force over one component.

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const VertexSet& component, const ScaledObjective& scaled, std::size_t cap)
      : collector_(cap) {
    order_ = bfs_order(g, component);
    const std::size_t k = order_.size();
    k_ = static_cast<int>(k);
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < k; ++i) local[order_[i]] = static_cast<int>(i);
    std::vector<std::uint32_t> adj(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (Vertex w : g.neighbors(order_[i])) {
        if (local[w] >= 0) adj[i] |= 1u << local[w];
      }
    }
    const std::uint32_t masks = 1u << k;
    key_.assign(masks, 0);
    connected_.assign(masks, 0);
    nbr_.assign(masks, 0);
    std::vector<std::int64_t> internal(masks, 0);
    std::vector<std::int64_t> degrees(masks, 0);
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      const int i = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      internal[mask] = internal[rest] + std::popcount(adj[i] & rest);
      degrees[mask] = degrees[rest] + static_cast<std::int64_t>(g.degree(order_[i]));
      nbr_[mask] = nbr_[rest] | adj[i];
      key_[mask] = scaled.key(internal[mask], degrees[mask], std::popcount(mask));
      std::uint32_t reach = 1u << i;
      while (true) {
        const std::uint32_t grown = reach | (nbr_[reach] & mask);
        if (grown == reach) break;
        reach = grown;
      }
      connected_[mask] = reach == mask ? 1 : 0;
    }
    full_ = masks - 1;
  }

  ComponentOptima run() {
    count_ = 0;
    descend(0);
    ComponentOptima out = collector_.take();
    return out;
  }

 private:
  static std::vector<Vertex> bfs_order(const Graph& g, const VertexSet& component) {
    std::vector<Vertex> order{component.front()};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[component.front()] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Vertex w : g.neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  bool viable(std::uint32_t unassigned) const {
    for (int j = 0; j < count_; ++j) {
      const std::uint32_t b = blocks_[j];
      if (!connected_[b] && !(nbr_[b] & unassigned)) return false;
    }
    return true;
  }

  void descend(int i) {
    if (i == k_) {
      std::int64_t key = 0;
      for (int j = 0; j < count_; ++j) key += key_[blocks_[j]];
      if (collector_.wants(key)) collector_.offer(key, materialise());
      return;
    }
    const std::uint32_t bit = 1u << i;
    const std::uint32_t unassigned = full_ & ~((bit << 1) - 1);
    for (int j = 0; j < count_; ++j) {
      blocks_[j] |= bit;
      if (viable(unassigned)) descend(i + 1);
      blocks_[j] &= ~bit;
    }
    blocks_[count_++] = bit;
    if (viable(unassigned)) descend(i + 1);
    --count_;
  }

  Blocks materialise() const {
    Blocks out;
    for (int j = 0; j < count_; ++j) {
      VertexSet block;
      for (std::uint32_t b = blocks_[j]; b; b &= b - 1) block.push_back(order_[std::countr_zero(b)]);
      std::sort(block.begin(), block.end());
      out.push_back(std::move(block));
    }
    return out;
  }

  std::vector<Vertex> order_;
  int k_ = 0;
  std::uint32_t full_ = 0;
  std::vector<std::int64_t> key_;
  std::vector<char> connected_;
  std::vector<std::uint32_t> nbr_;
  std::uint32_t blocks_[32] = {};
  int count_ = 0;
  Collector collector_;
};

// Structured candidate spaces.

void integer_partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& prefix,
                        std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    integer_partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  integer_partitions(n, n, prefix, out);
  return out;
}

/// All set partitions of `vertices` whose block sizes form the multiset `sizes`.
void expand_sizes(std::vector<Vertex> remaining, std::vector<std::size_t> sizes, Blocks& prefix,
                  std::vector<Blocks>& out, std::size_t cap) {
  if (remaining.empty()) {
    if (out.size() >= cap) {
      throw SolverRefusal("optima set exceeds the limit of " + std::to_string(cap) + " clusterings");
    }
    out.push_back(prefix);
    return;
  }
  std::sort(sizes.begin(), sizes.end());
  const Vertex first = remaining.front();
  const std::vector<Vertex> others(remaining.begin() + 1, remaining.end());
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    if (si > 0 && sizes[si] == sizes[si - 1]) continue;
    const std::size_t pick = sizes[si] - 1;
    std::vector<std::size_t> rest_sizes = sizes;
    rest_sizes.erase(rest_sizes.begin() + static_cast<std::ptrdiff_t>(si));
    std::vector<char> chosen(others.size(), 0);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(pick), 1);
    do {
      VertexSet block{first};
      std::vector<Vertex> left;
      for (std::size_t i = 0; i < others.size(); ++i) (chosen[i] ? block : left).push_back(others[i]);
      prefix.push_back(block);
      expand_sizes(std::move(left), rest_sizes, prefix, out, cap);
      prefix.pop_back();
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
}

std::vector<Vertex> iota_vertices(std::size_t offset, std::size_t count) {
  std::vector<Vertex> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = static_cast<Vertex>(offset + i);
  return v;
}

ComponentOptima solve_clique(std::size_t n, std::size_t offset, const ScaledObjective& scaled, std::size_t cap) {
  const auto block_key = [&](std::size_t s) {
    return scaled.key(static_cast<std::int64_t>(choose2(s)), static_cast<std::int64_t>(s * (n - 1)),
                      static_cast<std::int64_t>(s));
  };
  std::vector<std::vector<std::size_t>> best;
  std::int64_t best_key = 0;
  for (auto& parts : integer_partitions(n)) {
    std::int64_t key = 0;
    for (std::size_t s : parts) key += block_key(s);
    if (best.empty() || key > best_key) {
      best.clear();
      best_key = key;
    }
    if (key == best_key) best.push_back(std::move(parts));
  }
  ComponentOptima out{best_key, {}};
  for (const auto& sizes : best) {
    Blocks prefix;
    expand_sizes(iota_vertices(offset, n), sizes, prefix, out.options, cap);
  }
  return out;
}

ComponentOptima solve_star(std::size_t p, std::size_t offset, const ScaledObjective& scaled, std::size_t cap) {
  Collector collector(cap);
  std::vector<std::size_t> best_x;
  std::int64_t best_key = 0;
  for (std::size_t x = 0; x <= p; ++x) {
    const auto kept = static_cast<std::int64_t>(p - x);
    const std::int64_t key = scaled.key(kept, static_cast<std::int64_t>(p) + kept, kept + 1) +
                             static_cast<std::int64_t>(x) * scaled.key(0, 1, 1);
    if (best_x.empty() || key > best_key) {
      best_x.clear();
      best_key = key;
    }
    if (key == best_key) best_x.push_back(x);
  }
  for (std::size_t x : best_x) {
    std::vector<char> split(p, 0);
    std::fill(split.begin(), split.begin() + static_cast<std::ptrdiff_t>(x), 1);
    do {
      VertexSet centre{static_cast<Vertex>(offset)};
      Blocks blocks;
      for (std::size_t i = 0; i < p; ++i) {
        const auto leaf = static_cast<Vertex>(offset + 1 + i);
        if (split[i]) {
          blocks.push_back({leaf});
        } else {
          centre.push_back(leaf);
        }
      }
      blocks.push_back(std::move(centre));
      collector.offer(best_key, std::move(blocks));
    } while (std::prev_permutation(split.begin(), split.end()));
  }
  return collector.take();
}

ComponentOptima solve_pair_of_cliques(std::size_t n, std::size_t offset, const Graph& g,
                                      const ScaledObjective& scaled, std::size_t cap) {
  if (n < 6) {
    throw SolverRefusal("structured solver handles pair_of_cliques only for n >= 6, got n = " + std::to_string(n));
  }
  const auto range = [&](std::size_t lo, std::size_t hi) {
    VertexSet s;
    for (std::size_t v = lo; v < hi; ++v) s.push_back(static_cast<Vertex>(offset + v));
    return s;
  };
  const auto join = [](VertexSet a, const VertexSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  const VertexSet a = range(0, n);
  const VertexSet b = range(n, 2 * n);
  const VertexSet a0 = range(1, n);
  const VertexSet b0 = range(n + 1, 2 * n);
  const VertexSet a_bridge = range(0, 1);
  const VertexSet b_bridge = range(n, n + 1);
  const std::vector<Blocks> candidates = {
      {join(a, b)},
      {a, b},
      {a0, a_bridge, b0, b_bridge},
      {a0, a_bridge, b},
      {a, b0, b_bridge},
      {a0, b0, join(a_bridge, b_bridge)},
      {join(a, b_bridge), b0},
      {a0, join(b, a_bridge)},
  };
  Collector collector(cap);
  for (const auto& blocks : candidates) {
    std::int64_t key = 0;
    for (const auto& block : blocks) {
      key += scaled.key(static_cast<std::int64_t>(internal_edges(g, block)),
                        static_cast<std::int64_t>(degree_sum(g, block)), static_cast<std::int64_t>(block.size()));
    }
    if (collector.wants(key)) collector.offer(key, blocks);
  }
  return collector.take();
}

ComponentOptima solve_ring(std::size_t m, std::size_t n, std::size_t offset, const ScaledObjective& scaled,
                           std::size_t cap) {
  const auto arc_key = [&](std::size_t k) {
    const std::size_t bridges = k < m ? k - 1 : m;
    const std::size_t degree = k * n * (n - 1) + (k < m ? 2 * k : 2 * m);
    return scaled.key(static_cast<std::int64_t>(k * choose2(n) + bridges), static_cast<std::int64_t>(degree),
                      static_cast<std::int64_t>(k * n));
  };
  std::vector<std::vector<std::size_t>> best;
  std::int64_t best_key = 0;
  for (auto& parts : integer_partitions(m)) {
    std::int64_t key = 0;
    for (std::size_t k : parts) key += arc_key(k);
    if (best.empty() || key > best_key) {
      best.clear();
      best_key = key;
    }
    if (key == best_key) best.push_back(std::move(parts));
  }
  const auto clique_vertices = [&](std::size_t i, VertexSet& into) {
    for (std::size_t v = 0; v < n; ++v) into.push_back(static_cast<Vertex>(offset + i * n + v));
  };
  std::set<std::vector<char>> seen_cuts;
  Collector collector(cap);
  for (auto sizes : best) {
    if (sizes.size() == 1) {
      VertexSet all;
      for (std::size_t i = 0; i < m; ++i) clique_vertices(i, all);
      collector.offer(best_key, {all});
      continue;
    }
    std::sort(sizes.begin(), sizes.end());
    do {
      for (std::size_t start = 0; start < m; ++start) {
        std::vector<char> cuts(m, 0);
        std::size_t pos = start;
        for (std::size_t k : sizes) {
          cuts[pos] = 1;
          pos = (pos + k) % m;
        }
        if (!seen_cuts.insert(cuts).second) continue;
        Blocks blocks;
        pos = start;
        for (std::size_t k : sizes) {
          VertexSet block;
          for (std::size_t j = 0; j < k; ++j) clique_vertices((pos + j) % m, block);
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
          pos = (pos + k) % m;
        }
        collector.offer(best_key, std::move(blocks));
      }
    } while (std::next_permutation(sizes.begin(), sizes.end()));
  }
  return collector.take();
}

bool structured_kind(const ComponentRecipe& c) {
  switch (c.kind) {
    case ComponentKind::clique:
    case ComponentKind::star:
    case ComponentKind::ring_of_cliques:
    case ComponentKind::edge_pair:
      return true;
    case ComponentKind::pair_of_cliques:
      return c.n >= 6;
    default:
      return false;
  }
}

}  // namespace

bool OptimaSet::contains(const Clustering& c) const {
  return std::binary_search(clusterings.begin(), clusterings.end(), c);
}

bool OptimaSet::has_refinement_of(const Clustering& coarse) const {
  return std::any_of(clusterings.begin(), clusterings.end(), [&](const Clustering& c) { return c.refines(coarse); });
}

nlohmann::json optima_to_json(const OptimaSet& o) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : o.clusterings) list.push_back(clustering_to_json(c));
  nlohmann::json out = {{"clusterings", list}};
  out["objective"] = o.objective ? objective_to_json(*o.objective) : nlohmann::json(nullptr);
  out["value"] = o.value ? rational_to_json(*o.value) : nlohmann::json(nullptr);
  return out;
}

OptimaSet optima_from_json(const nlohmann::json& j) {
  OptimaSet o;
  if (j.contains("objective") && !j["objective"].is_null()) o.objective = objective_from_json(j["objective"]);
  if (j.contains("value") && !j["value"].is_null()) o.value = rational_from_json(j["value"]);
  for (const auto& c : j.at("clusterings")) o.clusterings.push_back(clustering_from_json(c));
  std::sort(o.clusterings.begin(), o.clusterings.end());
  return o;
}

OptimaSet brute_force_optimum(const Graph& g, const Objective& objective, const SolverLimits& limits) {
  const std::size_t cap_vertices = std::min<std::size_t>(limits.max_component_vertices, 31);
  const ScaledObjective scaled(objective, g.edge_count());
  std::vector<ComponentOptima> parts;
  for (const auto& component : connected_components(g)) {
    if (component.size() > cap_vertices) {
      throw SolverRefusal("component containing vertex " + std::to_string(component.front()) + " has " +
                          std::to_string(component.size()) + " vertices, above the brute-force limit of " +
                          std::to_string(cap_vertices));
    }
    parts.push_back(PartitionSearch(g, component, scaled, limits.max_optima).run());
  }
  return finish(objective, scaled, parts, limits.max_optima);
}

bool structured_supports(const NetworkRecipe& recipe, const Objective& objective) {
  return objective.kind == Objective::Kind::modularity && !recipe.components.empty() &&
         std::all_of(recipe.components.begin(), recipe.components.end(), structured_kind);
}

OptimaSet structured_optimum(const NetworkRecipe& recipe, const Objective& objective, const SolverLimits& limits) {
  if (objective.kind != Objective::Kind::modularity) {
    throw SolverRefusal("structured solver supports the modularity objective only");
  }
  const Graph g = build(recipe);
  if (g.edge_count() == 0) throw SolverRefusal("structured solver needs at least one edge");
  const ScaledObjective scaled(objective, g.edge_count());
  const auto offsets = component_offsets(recipe);
  const std::size_t cap = limits.max_optima;
  std::vector<ComponentOptima> parts;
  for (std::size_t i = 0; i < recipe.components.size(); ++i) {
    const auto& c = recipe.components[i];
    const std::size_t offset = offsets[i];
    switch (c.kind) {
      case ComponentKind::clique: parts.push_back(solve_clique(c.n, offset, scaled, cap)); break;
      case ComponentKind::edge_pair: parts.push_back(solve_clique(2, offset, scaled, cap)); break;
      case ComponentKind::star: parts.push_back(solve_star(c.p, offset, scaled, cap)); break;
      case ComponentKind::pair_of_cliques:
        parts.push_back(solve_pair_of_cliques(c.n, offset, g, scaled, cap));
        break;
      case ComponentKind::ring_of_cliques: parts.push_back(solve_ring(c.m, c.n, offset, scaled, cap)); break;
      default:
        throw SolverRefusal("structured solver does not handle component kind '" + to_string(c.kind) + "'");
    }
  }
  return finish(objective, scaled, parts, cap);
}

OptimalityReport is_optimal(const Graph& g, const Clustering& c, const Objective& objective,
                            const SolverLimits& limits) {
  const OptimaSet best = brute_force_optimum(g, objective, limits);
  OptimalityReport r;
  r.score = score(g, c, objective).total;
  r.optimum = *best.value;
  r.margin = r.optimum - r.score;
  r.optimal = r.margin == 0;
  return r;
}

}  // namespace axlab
