#include "forest/graph.hpp"

#include <algorithm>
#include <sstream>

#include "forest/error.hpp"

namespace forest {

Graph::Graph(int vertex_count) : n_(vertex_count), adjacency_(vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidSize, "negative vertex count");
  }
}

Graph Graph::from_edge_list(int vertex_count, std::span<const std::pair<int, int>> pairs) {
  Graph g(vertex_count);
  for (const auto& [u, v] : pairs) {
    g.add_edge(u, v);
  }
  return g;
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n_));
  }
  if (u == v) {
    throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw Error(ErrorCode::DuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  edges_.push_back({u, v});
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  return EdgeId{edges_.size() - 1};
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) {
    d[v] = degree(v);
  }
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    return false;
  }
  const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
}

Graph Graph::without_edge(EdgeId id) const {
  if (id.index >= edges_.size()) {
    throw Error(ErrorCode::ParameterOutOfRange, "edge id " + std::to_string(id.index));
  }
  Graph g(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != id.index) {
      g.add_edge(edges_[i].u, edges_[i].v);
    }
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> mapping) const {
  if (static_cast<int>(mapping.size()) != n_) {
    throw Error(ErrorCode::InvalidParameter, "relabeling has wrong length");
  }
  Graph g(n_);
  for (const auto& e : edges_) {
    g.add_edge(mapping[e.u], mapping[e.v]);
  }
  return g;
}

int Graph::covered_vertex_count() const {
  return static_cast<int>(std::count_if(adjacency_.begin(), adjacency_.end(),
                                        [](const auto& nb) { return !nb.empty(); }));
}

bool Graph::is_connected() const {
  if (n_ <= 1) {
    return true;
  }
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) {
    throw Error(ErrorCode::SizeCapExceeded, "adjacency masks need n <= 64");
  }
  std::vector<std::uint64_t> rows(n_, 0);
  for (const auto& e : edges_) {
    rows[e.u] |= std::uint64_t{1} << e.v;
    rows[e.v] |= std::uint64_t{1} << e.u;
  }
  return rows;
}

bool Graph::same_adjacency(const Graph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) {
    return false;
  }
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return other.has_edge(e.u, e.v); });
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (const auto& e : a.edges()) {
    g.add_edge(e.u, e.v);
  }
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) {
    g.add_edge(e.u + shift, e.v + shift);
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long n = -1;
  long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorCode::MalformedInput, "edge list must start with \"n m\"");
  }
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing) {
    throw Error(ErrorCode::MalformedInput, "trailing content after edge list");
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

}  // namespace forest
