#include "axlab/objectives.hpp"

#include <limits>

namespace axlab {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

void check_partition(const Graph& g, const Clustering& c) {
  if (!c.is_partition_of(g.vertex_count())) {
    throw std::invalid_argument("clustering is not a partition of the graph's " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
}

std::int64_t to_int64(const BigInt& value, const char* what) {
  if (value > BigInt(std::numeric_limits<std::int32_t>::max())) {
    throw std::invalid_argument(std::string(what) + " is too large for exact integer scoring");
  }
  return value.convert_to<std::int64_t>();
}

Rational sq(const Rational& r) { return r * r; }

}  // namespace

Objective Objective::cpm(Rational gamma) {
  if (gamma <= 0 || gamma >= 1) {
    throw std::invalid_argument("CPM resolution must lie in (0, 1), got " + to_string(gamma));
  }
  return {Kind::cpm, std::move(gamma)};
}

std::string Objective::name() const {
  return kind == Kind::modularity ? "modularity" : "cpm(" + to_string(gamma) + ")";
}

nlohmann::json objective_to_json(const Objective& o) {
  if (o.kind == Objective::Kind::modularity) return {{"kind", "modularity"}};
  return {{"kind", "cpm"}, {"gamma", to_string(o.gamma)}};
}

Objective objective_from_json(const nlohmann::json& j) {
  auto kind = j.at("kind").get<std::string>();
  if (kind == "modularity") return Objective::modularity();
  if (kind == "cpm") return Objective::cpm(rational_from_json(j.at("gamma")));
  throw std::invalid_argument("unknown objective '" + kind + "'");
}

nlohmann::json score_to_json(const ScoreBreakdown& s) {
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& cs : s.per_cluster) {
    clusters.push_back({{"cluster", cs.cluster}, {"score", rational_to_json(cs.score)}});
  }
  return {{"objective", objective_to_json(s.objective)},
          {"total", rational_to_json(s.total)},
          {"per_cluster", clusters}};
}

std::size_t internal_edges(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) in.at(v) = 1;
  std::size_t count = 0;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) count += (in[w] && v < w) ? 1 : 0;
  }
  return count;
}

std::size_t degree_sum(const Graph& g, std::span<const Vertex> s) {
  std::size_t total = 0;
  for (Vertex v : s) total += g.degree(v);
  return total;
}

Rational modularity_term(std::size_t internal, std::size_t degrees, std::size_t total_edges) {
  if (total_edges == 0) throw std::invalid_argument("modularity is undefined on an edgeless graph");
  const Rational m(total_edges);
  return Rational(internal) / m - sq(Rational(degrees) / (2 * m));
}

Rational cpm_term(std::size_t internal, std::size_t size, const Rational& gamma) {
  return Rational(internal) - gamma * Rational(size * (size - (size > 0 ? 1 : 0)) / 2);
}

ScoreBreakdown modularity_score(const Graph& g, const Clustering& c) {
  if (g.edge_count() == 0) throw std::invalid_argument("modularity is undefined on an edgeless graph");
  check_partition(g, c);
  ScoreBreakdown out{Objective::modularity(), {}, 0};
  for (const auto& cluster : c.clusters()) {
    Rational term = modularity_term(internal_edges(g, cluster), degree_sum(g, cluster), g.edge_count());
    out.total += term;
    out.per_cluster.push_back({cluster, std::move(term)});
  }
  return out;
}

ScoreBreakdown cpm_score(const Graph& g, const Clustering& c, const Rational& gamma) {
  Objective objective = Objective::cpm(gamma);
  check_partition(g, c);
  ScoreBreakdown out{objective, {}, 0};
  for (const auto& cluster : c.clusters()) {
    Rational term = cpm_term(internal_edges(g, cluster), cluster.size(), gamma);
    out.total += term;
    out.per_cluster.push_back({cluster, std::move(term)});
  }
  return out;
}

ScoreBreakdown score(const Graph& g, const Clustering& c, const Objective& objective) {
  return objective.kind == Objective::Kind::modularity ? modularity_score(g, c) : cpm_score(g, c, objective.gamma);
}

ScaledObjective::ScaledObjective(const Objective& objective, std::size_t total_edges)
    : modularity_(objective.kind == Objective::Kind::modularity) {
  if (modularity_) {
    if (total_edges > (1u << 20)) throw std::invalid_argument("graph too large for exact integer scoring");
    const auto m = static_cast<std::int64_t>(total_edges);
    four_m_ = 4 * m;
    scale_ = Rational(4 * m * m);
    if (m == 0) scale_ = 1;
  } else {
    a_ = to_int64(numerator(objective.gamma), "resolution numerator");
    const std::int64_t b = to_int64(denominator(objective.gamma), "resolution denominator");
    two_b_ = 2 * b;
    scale_ = Rational(two_b_);
  }
}

Rational ScaledObjective::to_rational(std::int64_t key_sum) const { return Rational(key_sum) / scale_; }

Rational delta_q_pair(std::size_t e, std::size_t total_edges) {
  if (e < 1 || total_edges < 2 * e + 1) {
    throw std::invalid_argument("delta_q_pair needs e >= 1 and |E| >= 2e + 1");
  }
  const BigInt m(total_edges);
  const BigInt ee(e);
  return Rational(2 * m - 4 * ee * ee - 4 * ee - 1) / Rational(2 * m * m);
}

Rational star_partition_modularity(std::size_t p, std::size_t x, std::size_t total_edges) {
  if (x > p || total_edges < p || total_edges == 0) {
    throw std::invalid_argument("star_partition_modularity needs 0 <= x <= p <= |E|");
  }
  const BigInt P(p);
  const BigInt X(x);
  const BigInt M(total_edges);
  return Rational(4 * P * X - 4 * M * X - X * X - X - 4 * P * P + 4 * M * P) / Rational(4 * M * M);
}

Rational delta_q_interedge(std::size_t e, std::size_t total_edges) {
  if (e < 2 || total_edges == 0) throw std::invalid_argument("delta_q_interedge needs e >= 2 and |E| >= 1");
  const BigInt m(total_edges);
  const BigInt e2 = BigInt(e) * BigInt(e);
  return Rational(2 * m - 4 * e2 * e2 + 4 * e2 + 1) / Rational(2 * m * m);
}

Rational delta_q_bridged_merge(std::size_t l1, std::size_t l2, std::size_t total_edges) {
  if (total_edges < l1 + l2 + 1) throw std::invalid_argument("delta_q_bridged_merge needs |E| >= l1 + l2 + 1");
  const Rational m(total_edges);
  return Rational(1) / m - Rational(BigInt(2 * l1 + 1) * BigInt(2 * l2 + 1)) / (2 * m * m);
}

Rational cpm_connectivity_bound(const Rational& gamma, std::size_t n) {
  if (gamma <= 0 || gamma >= 1) throw std::invalid_argument("CPM resolution must lie in (0, 1)");
  if (n < 1) throw std::invalid_argument("cluster size must be positive");
  return gamma * Rational(n - 1);
}

std::int64_t cpm_connectivity_ceiling(const Rational& gamma, std::size_t n) {
  Rational bound = cpm_connectivity_bound(gamma, n);
  BigInt q = numerator(bound) / denominator(bound);
  if (Rational(q) < bound) q += 1;
  return q.convert_to<std::int64_t>();
}

}  // namespace axlab
