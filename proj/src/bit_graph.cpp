#include "forest/bit_graph.hpp"

#include "forest/error.hpp"

namespace forest {

BitGraph to_bit_graph(const Graph& g) {
  if (g.vertex_count() > kMaxBitVertices) {
    throw Error(ErrorCode::SizeCapExceeded,
                "bit graph holds at most " + std::to_string(kMaxBitVertices) + " vertices");
  }
  BitGraph b;
  b.n = g.vertex_count();
  for (const auto& e : g.edges()) {
    b.add_edge(e.u, e.v);
  }
  return b;
}

Graph to_graph(const BitGraph& g) {
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.has_edge(u, v)) {
        out.add_edge(u, v);
      }
    }
  }
  return out;
}

std::vector<BitGraph> edge_components(const BitGraph& g, std::vector<std::vector<int>>& vertices) {
  std::vector<BitGraph> out;
  vertices.clear();
  Row unvisited = g.vertex_mask();
  while (unvisited) {
    const int start = std::countr_zero(unvisited);
    Row comp = Row{1} << start;
    Row frontier = comp;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) {
        next |= g.adj[std::countr_zero(f)];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    unvisited &= ~comp;
    if (std::popcount(comp) < 2) {
      continue;
    }
    std::array<int, kMaxBitVertices> position{};
    std::vector<int> members;
    for (Row c = comp; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      position[v] = static_cast<int>(members.size());
      members.push_back(v);
    }
    BitGraph part;
    part.n = static_cast<int>(members.size());
    for (int i = 0; i < part.n; ++i) {
      Row row = 0;
      for (Row r = g.adj[members[i]]; r; r &= r - 1) {
        row |= Row{1} << position[std::countr_zero(r)];
      }
      part.adj[i] = row;
    }
    out.push_back(part);
    vertices.push_back(std::move(members));
  }
  return out;
}

std::vector<BitGraph> edge_components(const BitGraph& g) {
  std::vector<std::vector<int>> unused;
  return edge_components(g, unused);
}

}  // namespace forest
