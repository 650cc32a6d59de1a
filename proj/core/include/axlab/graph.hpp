#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "axlab/types.hpp"

namespace axlab {

/// Simple undirected unweighted graph on vertices 0..vertex_count-1.
///
/// Immutable once built. Edges are kept sorted (u < v), adjacency lists are
/// sorted, and construction rejects self-loops, duplicates and out-of-range
/// endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  Graph with_edge_added(Vertex u, Vertex v) const;
  Graph with_edge_removed(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected_subset(const Graph& g, std::span<const Vertex> s);

/// Connected components of the subgraph left after repeatedly deleting
/// vertices of degree < k. Empty when nothing survives.
std::vector<VertexSet> k_core(const Graph& g, std::size_t k);

/// Largest k with a non-empty k-core; 0 for edgeless graphs.
std::size_t degeneracy(const Graph& g);

/// Size of a global minimum edge cut of the subgraph induced by s
/// (Stoer-Wagner). Throws std::invalid_argument if s is a singleton or
/// induces a disconnected subgraph.
std::size_t min_cut(const Graph& g, std::span<const Vertex> s);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph labelled i in `graph`.
  std::vector<Vertex> original;

  Clustering to_parent(const Clustering& local) const;
  /// Translates a clustering of parent vertices that covers exactly `original`.
  Clustering to_local(const Clustering& parent) const;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Edge-list text: header line "n <vertex_count>", then "u v" per line, '#'
/// comments ignored. Output is canonical (u < v, sorted).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace axlab
