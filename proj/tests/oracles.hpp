#pragma once

// Deliberately naive reference implementations used only by tests. Nothing
// here calls into the library beyond Graph construction and rationals.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "forest/graph.hpp"
#include "forest/rational.hpp"

namespace oracle {

using forest::Graph;
using forest::Rational;

inline int kappa_of(const Graph& g, const std::vector<int>& order) {
  std::vector<int> seen(g.vertex_count(), 0);
  int covered = 0, kept = 0;
  for (int i : order) {
    const auto& e = g.edges()[i];
    if (!seen[e.u] || !seen[e.v]) {
      ++kept;
      covered += !seen[e.u] + !seen[e.v];
      seen[e.u] = seen[e.v] = 1;
    }
  }
  return covered - kept;
}

/// k -> P(G, k) by iterating every permutation of edge indices.
inline std::map<int, Rational> distribution(const Graph& g) {
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::map<int, long> hits;
  long total = 0;
  do {
    ++hits[kappa_of(g, order)];
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  std::map<int, Rational> out;
  for (auto [k, c] : hits) {
    Rational q(c, total);
    q.canonicalize();
    out[k] = q;
  }
  return out;
}

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.vertex_count(), std::vector<bool>(g.vertex_count()));
  for (const auto& e : g.edges()) {
    a[e.u][e.v] = a[e.v][e.u] = true;
  }
  return a;
}

/// Isomorphism by trying every vertex permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  const auto ma = matrix(a), mb = matrix(b);
  const int n = a.vertex_count();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        ok = ma[i][j] == mb[p[i]][p[j]];
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) {
    return true;
  }
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    comp[find(e.u)] = find(e.v);
  }
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

/// Every labeled graph on n vertices with exactly m edges (edge subsets of K_n).
template <typename F>
void for_each_labeled(int n, int m, F&& f) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  const int N = static_cast<int>(all.size());
  for (long mask = 0; mask < (1L << N); ++mask) {
    if (m >= 0 && __builtin_popcountl(mask) != m) continue;
    std::vector<std::pair<int, int>> pick;
    for (int i = 0; i < N; ++i)
      if (mask >> i & 1) pick.push_back(all[i]);
    f(Graph::from_edge_list(n, pick));
  }
}

/// Isomorphism classes of connected labeled graphs on n vertices, deduplicated
/// with the permutation test above (bucketed by sorted degree sequence).
inline std::vector<Graph> connected_classes(int n) {
  std::map<std::pair<std::size_t, std::vector<int>>, std::vector<Graph>> buckets;
  std::size_t count = 0;
  for_each_labeled(n, -1, [&](const Graph& g) {
    if (!connected(g)) return;
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    auto& bucket = buckets[{g.edge_count(), deg}];
    for (const auto& h : bucket)
      if (isomorphic(g, h)) return;
    bucket.push_back(g);
    ++count;
  });
  std::vector<Graph> out;
  for (auto& [_, b] : buckets)
    for (auto& g : b) out.push_back(g);
  return out;
}

inline Rational edge_sum(const Graph& g) {
  Rational s = 0;
  for (const auto& e : g.edges()) s += Rational(1, g.degree(e.u) + g.degree(e.v) - 1);
  return s;
}

}  // namespace oracle
