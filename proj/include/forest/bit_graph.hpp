#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "forest/graph.hpp"

namespace forest {

inline constexpr int kMaxBitVertices = 32;

using Row = std::uint32_t;

/// Dense adjacency-bitmask graph used on the hot paths (canonical labeling
/// and the deletion recurrence). Row v has bit w set iff vw is an edge.
struct BitGraph {
  int n = 0;
  std::array<Row, kMaxBitVertices> adj{};

  int edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n; ++v) {
      twice += std::popcount(adj[v]);
    }
    return twice / 2;
  }
  bool has_edge(int u, int v) const noexcept { return (adj[u] >> v) & 1U; }
  void add_edge(int u, int v) noexcept {
    adj[u] |= Row{1} << v;
    adj[v] |= Row{1} << u;
  }
  void remove_edge(int u, int v) noexcept {
    adj[u] &= ~(Row{1} << v);
    adj[v] &= ~(Row{1} << u);
  }
  Row vertex_mask() const noexcept { return n == 32 ? ~Row{0} : (Row{1} << n) - 1; }

  friend bool operator==(const BitGraph& a, const BitGraph& b) {
    if (a.n != b.n) {
      return false;
    }
    for (int v = 0; v < a.n; ++v) {
      if (a.adj[v] != b.adj[v]) {
        return false;
      }
    }
    return true;
  }
};

/// Throws Error{SizeCapExceeded} when n > 32.
BitGraph to_bit_graph(const Graph& g);

/// Edges come out row-major: (0,1), (0,2), ..., (1,2), ...
Graph to_graph(const BitGraph& g);

/// Connected components that carry at least one edge. Each is renumbered to
/// 0..k-1 keeping the original relative vertex order. Components appear in
/// order of their smallest original vertex.
std::vector<BitGraph> edge_components(const BitGraph& g);

/// Same as edge_components, also reporting which original vertices each
/// component holds (vertices[c][i] is original vertex of component vertex i).
std::vector<BitGraph> edge_components(const BitGraph& g, std::vector<std::vector<int>>& vertices);

}  // namespace forest
