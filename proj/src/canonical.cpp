#include "forest/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "forest/error.hpp"

namespace forest {

namespace {

using Perm = std::array<signed char, kMaxBitVertices>;

// Ordered partition of the vertex set; each cell is a bitmask.
struct Partition {
  std::array<Row, kMaxBitVertices> cells{};
  int count = 0;

  bool discrete(int n) const noexcept { return count == n; }
};

// Split every cell by neighbor count into each splitter cell until the
// partition is equitable. Cell order after a split follows increasing count,
// which depends only on structure, so the result is label invariant.
void refine(const BitGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.count; ++w) {
      const Row splitter = p.cells[w];
      Partition next;
      bool split = false;
      for (int c = 0; c < p.count; ++c) {
        const Row cell = p.cells[c];
        if (std::has_single_bit(cell)) {
          next.cells[next.count++] = cell;
          continue;
        }
        std::array<Row, kMaxBitVertices + 1> buckets{};
        std::uint64_t used = 0;  // bit k set when bucket k is nonempty
        for (Row r = cell; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int k = std::popcount(g.adj[v] & splitter);
          buckets[k] |= Row{1} << v;
          used |= std::uint64_t{1} << k;
        }
        if (!std::has_single_bit(used)) {
          split = true;
        }
        for (std::uint64_t u = used; u; u &= u - 1) {
          next.cells[next.count++] = buckets[std::countr_zero(u)];
        }
      }
      if (split) {
        p = next;
        changed = true;
      }
    }
  }
}

struct Searcher {
  const BitGraph& g;
  int n;
  bool have_best = false;
  std::array<Row, kMaxBitVertices> best_rows{};
  Perm best_order{};
  std::vector<Perm> automorphisms;  // on input labels
  std::array<int, kMaxBitVertices> path{};
  int depth = 0;

  static constexpr std::size_t kMaxStoredAutomorphisms = 128;

  explicit Searcher(const BitGraph& graph) : g(graph), n(graph.n) {}

  void leaf(const Partition& p) {
    Perm order{};
    std::array<int, kMaxBitVertices> position{};
    for (int i = 0; i < n; ++i) {
      order[i] = static_cast<signed char>(std::countr_zero(p.cells[i]));
      position[order[i]] = i;
    }
    auto row_at = [&](int i) {
      Row row = 0;
      for (Row r = g.adj[order[i]]; r; r &= r - 1) {
        row |= Row{1} << position[std::countr_zero(r)];
      }
      return row;
    };
    if (!have_best) {
      for (int i = 0; i < n; ++i) {
        best_rows[i] = row_at(i);
      }
      best_order = order;
      have_best = true;
      return;
    }
    int i = 0;
    std::array<Row, kMaxBitVertices> rows{};
    for (; i < n; ++i) {
      rows[i] = row_at(i);
      if (rows[i] != best_rows[i]) {
        break;
      }
    }
    if (i == n) {
      if (automorphisms.size() < kMaxStoredAutomorphisms) {
        Perm gamma{};
        for (int j = 0; j < n; ++j) {
          gamma[best_order[j]] = order[j];
        }
        automorphisms.push_back(gamma);
      }
      return;
    }
    if (rows[i] < best_rows[i]) {
      for (int j = i + 1; j < n; ++j) {
        rows[j] = row_at(j);
      }
      best_rows = rows;
      best_order = order;
    }
  }

  int find(std::array<int, kMaxBitVertices>& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Orbits of the group generated by stored automorphisms fixing the
  // current path pointwise.
  void orbits(std::array<int, kMaxBitVertices>& parent) {
    std::iota(parent.begin(), parent.begin() + n, 0);
    for (const Perm& gamma : automorphisms) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) {
        fixes = gamma[path[d]] == path[d];
      }
      if (!fixes) {
        continue;
      }
      for (int v = 0; v < n; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  }

  void search(Partition p) {
    refine(g, p);
    if (p.discrete(n)) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::has_single_bit(p.cells[target])) {
      ++target;
    }
    const Row cell = p.cells[target];
    Row tried = 0;
    std::array<int, kMaxBitVertices> parent{};
    std::size_t seen_automorphisms = static_cast<std::size_t>(-1);
    for (Row r = cell; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (tried) {
        if (seen_automorphisms != automorphisms.size()) {
          orbits(parent);
          seen_automorphisms = automorphisms.size();
        }
        bool redundant = false;
        for (Row t = tried; t && !redundant; t &= t - 1) {
          redundant = find(parent, std::countr_zero(t)) == find(parent, v);
        }
        if (redundant) {
          continue;
        }
      }
      tried |= Row{1} << v;

      Partition child;
      for (int c = 0; c < target; ++c) {
        child.cells[child.count++] = p.cells[c];
      }
      child.cells[child.count++] = Row{1} << v;
      child.cells[child.count++] = cell & ~(Row{1} << v);
      for (int c = target + 1; c < p.count; ++c) {
        child.cells[child.count++] = p.cells[c];
      }
      path[depth++] = v;
      search(child);
      --depth;
    }
  }
};

CanonicalKey encode_key(int n, const std::array<Row, kMaxBitVertices>& rows) {
  const int bytes_per_row = (n + 7) / 8;
  std::string bytes;
  bytes.reserve(1 + static_cast<std::size_t>(n) * bytes_per_row);
  bytes.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < bytes_per_row; ++b) {
      bytes.push_back(static_cast<char>((rows[i] >> (8 * b)) & 0xFFU));
    }
  }
  return CanonicalKey{std::move(bytes)};
}

}  // namespace

CanonicalForm canonical_form(const BitGraph& g, int cap) {
  cap = std::min(cap, kMaxBitVertices);
  if (g.n > cap) {
    throw Error(ErrorCode::SizeCapExceeded,
                "canonical labeling capped at n=" + std::to_string(cap) + ", got n=" + std::to_string(g.n));
  }
  CanonicalForm out;
  if (g.n == 0) {
    out.key = encode_key(0, {});
    return out;
  }

  Searcher s(g);
  // The first refinement of the unit partition separates degree classes.
  Partition p;
  p.cells[0] = g.vertex_mask();
  p.count = 1;
  s.search(p);

  out.key = encode_key(g.n, s.best_rows);
  out.graph.n = g.n;
  out.graph.adj = {};
  for (int i = 0; i < g.n; ++i) {
    out.graph.adj[i] = s.best_rows[i];
  }
  out.order.resize(g.n);
  std::array<int, kMaxBitVertices> position{};
  for (int i = 0; i < g.n; ++i) {
    out.order[i] = s.best_order[i];
    position[s.best_order[i]] = i;
  }
  out.automorphisms.reserve(s.automorphisms.size());
  for (const Perm& gamma : s.automorphisms) {
    std::vector<int> canon(g.n);
    for (int i = 0; i < g.n; ++i) {
      canon[i] = position[gamma[out.order[i]]];
    }
    out.automorphisms.push_back(std::move(canon));
  }
  return out;
}

std::vector<int> equitable_colors(const BitGraph& g) {
  std::vector<int> colors(g.n, 0);
  if (g.n == 0) {
    return colors;
  }
  Partition p;
  p.cells[0] = g.vertex_mask();
  p.count = 1;
  refine(g, p);
  for (int c = 0; c < p.count; ++c) {
    for (Row r = p.cells[c]; r; r &= r - 1) {
      colors[std::countr_zero(r)] = c;
    }
  }
  return colors;
}

CanonicalKey canonical_key(const BitGraph& g, int cap) { return canonical_form(g, cap).key; }

CanonicalKey canonical_key(const Graph& g, int cap) {
  if (g.vertex_count() > std::min(cap, kMaxBitVertices)) {
    throw Error(ErrorCode::SizeCapExceeded,
                "canonical labeling capped at n=" + std::to_string(cap) + ", got n=" + std::to_string(g.vertex_count()));
  }
  return canonical_form(to_bit_graph(g), cap).key;
}

}  // namespace forest
