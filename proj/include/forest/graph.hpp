#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace forest {

using Vertex = int;

/// Position of an edge in Graph::edges().
struct EdgeId {
  std::size_t index = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list keeps the order it was built with; EdgeId i always refers to
/// edges()[i]. Isolated vertices are allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
  static Graph from_edge_list(int vertex_count, std::span<const std::pair<int, int>> pairs);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id.index); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  std::vector<int> degrees() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Appends edge {u,v}; same validation as from_edge_list.
  EdgeId add_edge(Vertex u, Vertex v);

  Graph without_edge(EdgeId id) const;

  /// Vertex v of this graph becomes vertex mapping[v]; edge order is kept.
  Graph relabeled(std::span<const int> mapping) const;

  /// Number of vertices with at least one incident edge.
  int covered_vertex_count() const;
  bool is_connected() const;

  /// Row bitmasks of the adjacency matrix; requires vertex_count() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  /// Same vertex count and same edge set, ignoring edge order and orientation.
  bool same_adjacency(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Text edge-list format: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace forest
