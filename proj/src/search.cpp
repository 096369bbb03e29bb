#include "forest/search.hpp"

#include <algorithm>
#include <map>

#include "forest/error.hpp"
#include "forest/generators.hpp"
#include "forest/graph6.hpp"
#include "forest/process.hpp"
#include "forest/structure.hpp"

namespace forest {

namespace {

using ClassMap = std::map<CanonicalKey, BitGraph>;

void insert_class(ClassMap& classes, const BitGraph& g) {
  CanonicalForm form = canonical_form(g);
  classes.try_emplace(std::move(form.key), form.graph);
}

std::vector<Graph> sorted_graphs(const std::vector<ClassMap>& levels) {
  std::vector<Graph> out;
  for (const auto& level : levels) {
    for (const auto& [key, g] : level) {
      out.push_back(to_graph(g));
    }
  }
  return out;
}

void require_cap(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::SizeCapExceeded, std::string(what) + " supports " + std::to_string(lo) + " <= n <= " +
                                                std::to_string(hi) + ", got " + std::to_string(n));
  }
}

struct Bucketed {
  Graph graph;
  CanonicalKey key;
  ForestDistribution polynomial;
};

std::vector<PairReport> pairs_with_equal_polynomials(const std::vector<Graph>& graphs, ForestEngine& engine,
                                                     bool flag_edge_transitive) {
  std::map<std::string, std::vector<Bucketed>> buckets;
  for (const auto& g : graphs) {
    ForestDistribution p = engine.polynomial(g);
    buckets[polynomial_signature(p)].push_back({g, canonical_key(g), std::move(p)});
  }
  std::vector<PairReport> out;
  for (const auto& [signature, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& a = members[i];
        const auto& b = members[j];
        if (!same_polynomial(a.polynomial, b.polynomial) || a.key == b.key) {
          continue;
        }
        PairReport r;
        r.key_a = a.key;
        r.key_b = b.key;
        r.graph6_a = serialize_graph6(a.graph);
        r.graph6_b = serialize_graph6(b.graph);
        r.shared_polynomial = a.polynomial;
        r.explained_by_edge_transitivity = flag_edge_transitive && explained_by_edge_transitivity(a.graph, b.graph);
        out.push_back(std::move(r));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PairReport& x, const PairReport& y) {
    return std::tie(x.key_a, x.key_b) < std::tie(y.key_a, y.key_b);
  });
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  require_cap(n, 1, kGraphEnumerationCap, "graph enumeration");
  std::vector<ClassMap> levels(1);
  BitGraph empty;
  empty.n = n;
  insert_class(levels[0], empty);
  const int max_edges = n * (n - 1) / 2;
  for (int m = 1; m <= max_edges; ++m) {
    ClassMap next;
    for (const auto& [key, g] : levels.back()) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.has_edge(u, v)) {
            BitGraph h = g;
            h.add_edge(u, v);
            insert_class(next, h);
          }
        }
      }
    }
    levels.push_back(std::move(next));
  }
  return sorted_graphs(levels);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  require_cap(n, 2, kGraphEnumerationCap, "connected graph enumeration");
  std::vector<Graph> out;
  for (auto& g : enumerate_graphs(n)) {
    if (g.is_connected()) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> enumerate_connected_by_edge_count(int max_edges) {
  // A connected graph with m edges has at most m + 1 vertices.
  require_cap(max_edges, 1, kDefaultCanonicalCap - 1, "edge-count enumeration");
  std::vector<ClassMap> levels(1);
  BitGraph k2;
  k2.n = 2;
  k2.add_edge(0, 1);
  insert_class(levels[0], k2);
  for (int m = 2; m <= max_edges; ++m) {
    ClassMap next;
    for (const auto& [key, g] : levels.back()) {
      for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
          if (!g.has_edge(u, v)) {
            BitGraph h = g;
            h.add_edge(u, v);
            insert_class(next, h);
          }
        }
        BitGraph h = g;
        h.n = g.n + 1;
        h.add_edge(u, g.n);
        insert_class(next, h);
      }
    }
    levels.push_back(std::move(next));
  }
  return sorted_graphs(levels);
}

std::vector<Graph> enumerate_trees(int n) {
  require_cap(n, 1, kTreeEnumerationCap, "tree enumeration");
  ClassMap level;
  BitGraph single;
  single.n = 1;
  insert_class(level, single);
  for (int size = 2; size <= n; ++size) {
    ClassMap next;
    for (const auto& [key, t] : level) {
      for (int v = 0; v < t.n; ++v) {
        BitGraph h = t;
        h.n = t.n + 1;
        h.add_edge(v, t.n);
        insert_class(next, h);
      }
    }
    level = std::move(next);
  }
  return sorted_graphs({level});
}

Graph decode_prufer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "Prufer entry " + std::to_string(v));
    }
    ++degree[v];
  }
  Graph g(n);
  for (int v : seq) {
    const int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    g.add_edge(std::min(leaf, v), std::max(leaf, v));
    --degree[leaf];
    --degree[v];
  }
  int u = -1;
  for (int w = 0; w < n; ++w) {
    if (degree[w] == 1) {
      if (u < 0) {
        u = w;
      } else {
        g.add_edge(u, w);
      }
    }
  }
  return g;
}

std::vector<Graph> enumerate_trees_prufer(int n) {
  require_cap(n, 1, kPruferEnumerationCap, "Prufer enumeration");
  if (n <= 2) {
    return enumerate_trees(n);
  }
  ClassMap classes;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    insert_class(classes, to_bit_graph(decode_prufer(seq)));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) {
      seq[i++] = 0;
    }
    if (i == n - 2) {
      break;
    }
  }
  return sorted_graphs({classes});
}

bool explained_by_edge_transitivity(const Graph& a, const Graph& b) {
  auto one_way = [](const Graph& full, const Graph& minus) {
    if (full.edge_count() != minus.edge_count() + 1 || full.vertex_count() != minus.vertex_count()) {
      return false;
    }
    // Isolated edges break the deletion identity for the whole graph.
    if (!is_edge_transitive(full) || full.edge_count() < 2) {
      return false;
    }
    for (const auto& e : full.edges()) {
      if (full.degree(e.u) == 1 && full.degree(e.v) == 1) {
        return false;
      }
    }
    return canonical_key(full.without_edge(EdgeId{0})) == canonical_key(minus);
  };
  return one_way(a, b) || one_way(b, a);
}

std::vector<PairReport> find_equal_polynomial_pairs(int n, ForestEngine& engine) {
  return pairs_with_equal_polynomials(enumerate_connected_graphs(n), engine, true);
}

std::vector<TwinReport> find_edge_degree_twins(int n, ForestEngine& engine) {
  std::map<std::vector<int>, std::vector<Bucketed>> buckets;
  for (const auto& g : enumerate_connected_graphs(n)) {
    std::vector<int> sums;
    for (const auto& e : g.edges()) {
      sums.push_back(g.degree(e.u) + g.degree(e.v));
    }
    std::sort(sums.begin(), sums.end());
    buckets[sums].push_back({g, canonical_key(g), engine.polynomial(g)});
  }
  std::vector<TwinReport> out;
  for (const auto& [sums, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& a = members[i];
        const auto& b = members[j];
        if (same_polynomial(a.polynomial, b.polynomial)) {
          continue;
        }
        out.push_back({a.key, b.key, serialize_graph6(a.graph), serialize_graph6(b.graph), a.polynomial,
                       b.polynomial, expected_components(a.graph)});
      }
    }
  }
  return out;
}

ConjectureResult check_conjecture(int k, ForestEngine& engine) {
  if (k < 1) {
    throw Error(ErrorCode::InvalidSize, "conjecture is stated for k >= 1");
  }
  if (2 * k + 1 > engine.options().canonical_cap) {
    throw Error(ErrorCode::SizeCapExceeded, "G_{2k+1} exceeds the canonical labeling cap");
  }
  ConjectureResult r;
  r.p_G = engine.polynomial(generate(family::BalancedBipartitePlusEdge{k}));
  r.p_K = engine.polynomial(generate(family::CompleteBipartite{k, k + 1}));
  r.holds = same_polynomial(r.p_G, r.p_K);
  return r;
}

bool is_log_concave(const ForestDistribution& d) {
  if (d.probs.empty()) {
    return true;
  }
  const int lo = d.probs.begin()->first;
  const int hi = d.probs.rbegin()->first;
  for (int k = lo; k <= hi; ++k) {
    if (d.probability(k) * d.probability(k) < d.probability(k - 1) * d.probability(k + 1)) {
      return false;
    }
  }
  return true;
}

bool check_log_concavity(const Graph& g, ForestEngine& engine) { return is_log_concave(engine.polynomial(g)); }

std::vector<LogConcavityViolation> sweep_log_concavity(int n_max, ForestEngine& engine) {
  require_cap(n_max, 2, kGraphEnumerationCap, "log-concavity sweep");
  std::vector<LogConcavityViolation> out;
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& g : enumerate_connected_graphs(n)) {
      ForestDistribution p = engine.polynomial(g);
      if (!is_log_concave(p)) {
        out.push_back({serialize_graph6(g), std::move(p)});
      }
    }
  }
  return out;
}

std::vector<PairReport> find_tree_pairs(int n, ForestEngine& engine) {
  require_cap(n, 2, kTreeEnumerationCap, "tree pair search");
  return pairs_with_equal_polynomials(enumerate_trees(n), engine, false);
}

}  // namespace forest
