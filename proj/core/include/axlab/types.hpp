#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace axlab {

using Vertex = std::uint32_t;

/// Exact rational used for every score; doubles only appear in reports.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3/7", "-2", "0.25" or "1e-1" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// {"num": "...", "den": "...", "decimal": ...}
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> members);
bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big);

/// A partition of 0..n-1 into disjoint clusters, kept in canonical order:
/// every cluster sorted, clusters ordered by smallest member. Equality of two
/// Clustering values is therefore equality of partitions.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<VertexSet> clusters);

  static Clustering singletons(std::size_t n);
  static Clustering one_block(std::size_t n);
  static Clustering from_labels(std::span<const std::size_t> labels);

  const std::vector<VertexSet>& clusters() const { return clusters_; }
  std::size_t size() const { return clusters_.size(); }
  std::size_t vertex_count() const;

  /// label[v] = index of v's cluster in canonical order.
  std::vector<std::size_t> labels() const;

  bool is_partition_of(std::size_t n) const;
  bool contains_cluster(std::span<const Vertex> cluster) const;

  /// True when every cluster of *this is contained in some cluster of other.
  bool refines(const Clustering& other) const;

  friend bool operator==(const Clustering&, const Clustering&) = default;
  friend auto operator<=>(const Clustering& a, const Clustering& b) {
    return a.clusters_ <=> b.clusters_;
  }

 private:
  std::vector<VertexSet> clusters_;
};

nlohmann::json clustering_to_json(const Clustering& c);
Clustering clustering_from_json(const nlohmann::json& j);

/// Raised by exact solvers when an instance exceeds the configured limits.
class SolverRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace axlab
