#include "forest/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "forest/bit_graph.hpp"
#include "forest/canonical.hpp"
#include "forest/error.hpp"

namespace forest {

ComponentSplit components(const Graph& g) {
  ComponentSplit out;
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) {
      continue;
    }
    if (g.degree(s) == 0) {
      label[s] = -2;
      ++out.isolated;
      continue;
    }
    const int id = static_cast<int>(out.parts.size());
    std::vector<Vertex> members{s};
    label[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (label[w] == -1) {
          label[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.parts.push_back({Graph(static_cast<int>(members.size())), std::move(members)});
  }
  std::vector<int> local(n, -1);
  for (const auto& part : out.parts) {
    for (std::size_t i = 0; i < part.vertices.size(); ++i) {
      local[part.vertices[i]] = static_cast<int>(i);
    }
  }
  for (const auto& e : g.edges()) {
    out.parts[label[e.u]].graph.add_edge(local[e.u], local[e.v]);
  }
  return out;
}

std::vector<EdgeId> bridges(const Graph& g) {
  const int n = g.vertex_count();
  // Incidence lists carrying edge ids so parallel traversal skips only the tree edge.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    inc[g.edges()[i].u].emplace_back(g.edges()[i].v, i);
    inc[g.edges()[i].v].emplace_back(g.edges()[i].u, i);
  }
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> out;
  int clock = 0;
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex v, std::size_t via) {
    disc[v] = low[v] = clock++;
    for (const auto& [w, id] : inc[v]) {
      if (id == via) {
        continue;
      }
      if (disc[w] == -1) {
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) {
          out.push_back(EdgeId{id});
        }
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] == -1) {
      dfs(v, static_cast<std::size_t>(-1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> large_bridges(const Graph& g) {
  std::vector<EdgeId> out;
  for (EdgeId id : bridges(g)) {
    const Edge& e = g.edge(id);
    // Removing a bridge leaves an edge on u's side iff u had another edge.
    if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) {
      out.push_back(id);
    }
  }
  return out;
}

int edge_codegree(const Graph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return g.degree(edge.u) + g.degree(edge.v) - 2;
}

Rational cheeger_constant(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "Cheeger constant needs at least one edge");
  }
  std::vector<Vertex> covered;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) {
      covered.push_back(v);
    }
  }
  const int n = static_cast<int>(covered.size());
  if (n > kCheegerVertexCap) {
    throw Error(ErrorCode::SizeCapExceeded,
                "Cheeger enumeration capped at " + std::to_string(kCheegerVertexCap) + " vertices");
  }
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) {
    local[covered[i]] = i;
  }
  std::vector<std::uint32_t> adj(n, 0);
  std::vector<int> deg(n, 0);
  for (const auto& e : g.edges()) {
    adj[local[e.u]] |= 1U << local[e.v];
    adj[local[e.v]] |= 1U << local[e.u];
  }
  long total_volume = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = std::popcount(adj[i]);
    total_volume += deg[i];
  }

  const std::uint32_t subsets = 1U << n;
  std::vector<int> volume(subsets, 0);
  std::vector<int> cut(subsets, 0);
  long best_cut = -1;
  long best_volume = 1;
  for (std::uint32_t x = 1; x < subsets; ++x) {
    const int v = std::countr_zero(x);
    const std::uint32_t rest = x & (x - 1);
    volume[x] = volume[rest] + deg[v];
    cut[x] = cut[rest] + deg[v] - 2 * std::popcount(adj[v] & rest);
    if (2L * volume[x] > total_volume) {
      continue;
    }
    if (best_cut < 0 || static_cast<long>(cut[x]) * best_volume < best_cut * volume[x]) {
      best_cut = cut[x];
      best_volume = volume[x];
    }
  }
  return make_rational(BigInt(best_cut), BigInt(best_volume));
}

namespace {

constexpr int kAutomorphismVertexCap = kDefaultCanonicalCap;

// Backtracking search for an automorphism with image[a]=u and image[b]=v.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const BitGraph& g) : g_(g), colors_(equitable_colors(g)) {}

  bool exists(int a, int b, int u, int v) {
    if (colors_[a] != colors_[u] || colors_[b] != colors_[v]) {
      return false;
    }
    image_.assign(g_.n, -1);
    used_ = 0;
    order_.clear();
    // Assign a and b first, then grow breadth-first so every later vertex has
    // an assigned neighbor whose image narrows its candidates.
    std::vector<char> queued(g_.n, 0);
    order_.push_back(a);
    order_.push_back(b);
    queued[a] = queued[b] = 1;
    for (std::size_t head = 0; order_.size() < static_cast<std::size_t>(g_.n); ++head) {
      if (head == order_.size()) {
        for (int w = 0; w < g_.n; ++w) {
          if (!queued[w]) {
            queued[w] = 1;
            order_.push_back(w);
            break;
          }
        }
      }
      for (Row r = g_.adj[order_[head]]; r; r &= r - 1) {
        const int w = std::countr_zero(r);
        if (!queued[w]) {
          queued[w] = 1;
          order_.push_back(w);
        }
      }
    }
    if (!assign(a, u) || !assign(b, v)) {
      return false;
    }
    return extend(2);
  }

 private:
  bool assign(int x, int y) {
    if (used_ & (Row{1} << y)) {
      return false;
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int w = order_[i];
      if (image_[w] < 0) {
        continue;
      }
      if (g_.has_edge(x, w) != g_.has_edge(y, image_[w])) {
        return false;
      }
    }
    image_[x] = y;
    used_ |= Row{1} << y;
    return true;
  }

  void unassign(int x) {
    used_ &= ~(Row{1} << image_[x]);
    image_[x] = -1;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    const int x = order_[depth];
    Row candidates = g_.vertex_mask() & ~used_;
    for (Row r = g_.adj[x]; r; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (image_[w] >= 0) {
        candidates &= g_.adj[image_[w]];
      }
    }
    for (Row r = candidates; r; r &= r - 1) {
      const int y = std::countr_zero(r);
      if (colors_[y] != colors_[x]) {
        continue;
      }
      if (assign(x, y)) {
        if (extend(depth + 1)) {
          return true;
        }
        unassign(x);
      }
    }
    return false;
  }

  const BitGraph& g_;
  std::vector<int> colors_;
  std::vector<int> image_;
  std::vector<int> order_;
  Row used_ = 0;
};

}  // namespace

std::vector<int> edge_orbits(const Graph& g) {
  if (g.vertex_count() > kAutomorphismVertexCap) {
    throw Error(ErrorCode::SizeCapExceeded,
                "automorphism search capped at n=" + std::to_string(kAutomorphismVertexCap));
  }
  const BitGraph bg = to_bit_graph(g);
  AutomorphismSearch search(bg);
  const auto& edges = g.edges();
  std::vector<int> orbit(edges.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (orbit[i] >= 0) {
      continue;
    }
    orbit[i] = next;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (orbit[j] >= 0) {
        continue;
      }
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (search.exists(a.u, a.v, b.u, b.v) || search.exists(a.u, a.v, b.v, b.u)) {
        orbit[j] = next;
      }
    }
    ++next;
  }
  return orbit;
}

bool is_edge_transitive(const Graph& g) {
  const auto orbit = edge_orbits(g);
  return std::all_of(orbit.begin(), orbit.end(), [](int o) { return o == 0; });
}

}  // namespace forest
