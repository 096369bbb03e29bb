#include "forest/engine.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <utility>

#include "forest/error.hpp"
#include "forest/structure.hpp"

namespace forest {

namespace {

using Counts = std::vector<BigInt>;

// Counts for a disjoint union of `acc` (acc_edges edges) and `part`.
void absorb(Counts& acc, int& acc_edges, const Counts& part, int part_edges) {
  Counts out(acc.size() + part.size() - 1, 0);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (part[j] != 0) {
        out[i + j] += acc[i] * part[j];
      }
    }
  }
  const BigInt interleavings = binomial(acc_edges + part_edges, part_edges);
  for (auto& c : out) {
    c *= interleavings;
  }
  acc = std::move(out);
  acc_edges += part_edges;
}

void add_into(Counts& total, const Counts& term, const BigInt& weight) {
  if (total.size() < term.size()) {
    total.resize(term.size(), 0);
  }
  for (std::size_t k = 0; k < term.size(); ++k) {
    total[k] += term[k] * weight;
  }
}

const Counts kSingleEdge{0, 1};

struct EdgeList {
  std::vector<std::pair<int, int>> edges;
  std::array<std::array<int, kMaxBitVertices>, kMaxBitVertices> index{};
};

EdgeList list_edges(const BitGraph& g) {
  EdgeList out;
  for (int u = 0; u < g.n; ++u) {
    for (Row r = g.adj[u] & ~((Row{2} << u) - 1); r; r &= r - 1) {
      const int v = std::countr_zero(r);
      out.index[u][v] = out.index[v][u] = static_cast<int>(out.edges.size());
      out.edges.emplace_back(u, v);
    }
  }
  return out;
}

// Orbit representative for each edge under the group generated by `automorphisms`.
std::vector<int> edge_orbit_roots(const EdgeList& el, const std::vector<std::vector<int>>& automorphisms) {
  std::vector<int> parent(el.edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& gamma : automorphisms) {
    for (std::size_t i = 0; i < el.edges.size(); ++i) {
      const auto [u, v] = el.edges[i];
      const int a = find(static_cast<int>(i));
      const int b = find(el.index[gamma[u]][gamma[v]]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<int> root(el.edges.size());
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    root[i] = find(static_cast<int>(i));
  }
  return root;
}

}  // namespace

ForestEngine::ForestEngine(EngineOptions options) : options_(options) {}

std::size_t ForestEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

ForestEngine::Counts ForestEngine::expand(const BitGraph& g, const std::vector<std::vector<int>>& automorphisms) {
  const EdgeList el = list_edges(g);
  std::vector<int> weight(el.edges.size(), 0);
  if (options_.use_symmetry) {
    const auto root = edge_orbit_roots(el, automorphisms);
    for (int r : root) {
      ++weight[r];
    }
  } else {
    std::fill(weight.begin(), weight.end(), 1);
  }

  Counts total;
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    if (weight[i] == 0) {
      continue;
    }
    BitGraph rest = g;
    rest.remove_edge(el.edges[i].first, el.edges[i].second);
    auto parts = edge_components(rest);
    std::sort(parts.begin(), parts.end(),
              [](const BitGraph& a, const BitGraph& b) { return a.edge_count() < b.edge_count(); });
    Counts acc{1};
    int acc_edges = 0;
    for (const auto& part : parts) {
      const int edges = part.edge_count();
      absorb(acc, acc_edges, options_.memoize ? component_counts(part) : plain_counts(part), edges);
    }
    add_into(total, acc, BigInt(weight[i]));
  }
  return total;
}

ForestEngine::Counts ForestEngine::plain_counts(const BitGraph& component) {
  if (component.edge_count() == 1) {
    return kSingleEdge;
  }
  return expand(component, {});
}

ForestEngine::Counts ForestEngine::component_counts(const BitGraph& component) {
  if (component.edge_count() == 1) {
    return kSingleEdge;
  }
  CanonicalForm form = canonical_form(component, options_.canonical_cap);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = memo_.find(form.key.bytes); it != memo_.end()) {
      return it->second;
    }
  }
  Counts counts = expand(form.graph, form.automorphisms);
  std::unique_lock lock(mutex_);
  if (memo_.size() >= options_.max_memo_entries) {
    throw Error(ErrorCode::MemoryBudgetExceeded,
                "memo table reached " + std::to_string(options_.max_memo_entries) + " entries");
  }
  memo_.try_emplace(std::move(form.key.bytes), counts);
  return counts;
}

ForestDistribution ForestEngine::polynomial(const Graph& g) {
  ComponentSplit split = components(g);
  std::sort(split.parts.begin(), split.parts.end(), [](const Component& a, const Component& b) {
    return a.graph.edge_count() < b.graph.edge_count();
  });
  Counts acc{1};
  int acc_edges = 0;
  for (const auto& part : split.parts) {
    if (part.graph.vertex_count() > options_.canonical_cap) {
      throw Error(ErrorCode::SizeCapExceeded, "component with " + std::to_string(part.graph.vertex_count()) +
                                                  " vertices exceeds the cap of " +
                                                  std::to_string(options_.canonical_cap));
    }
    const BitGraph bg = to_bit_graph(part.graph);
    const int edges = static_cast<int>(part.graph.edge_count());
    absorb(acc, acc_edges, options_.memoize ? component_counts(bg) : plain_counts(bg), edges);
  }
  return distribution_from_counts(g.vertex_count(), static_cast<int>(g.edge_count()), acc);
}

BigInt ForestEngine::one_component_count(const BitGraph& component) {
  const int m = component.edge_count();
  if (m == 1) {
    return 1;
  }
  CanonicalForm form = canonical_form(component, options_.canonical_cap);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = one_component_memo_.find(form.key.bytes); it != one_component_memo_.end()) {
      return it->second;
    }
  }
  const BitGraph& g = form.graph;
  const EdgeList el = list_edges(g);
  const auto root = edge_orbit_roots(el, options_.use_symmetry ? form.automorphisms
                                                                : std::vector<std::vector<int>>{});
  std::vector<int> weight(el.edges.size(), 0);
  for (int r : root) {
    ++weight[r];
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    if (weight[i] == 0) {
      continue;
    }
    BitGraph rest = g;
    rest.remove_edge(el.edges[i].first, el.edges[i].second);
    const auto parts = edge_components(rest);
    // Two parts means the edge was a large bridge: one tree is impossible.
    if (parts.size() == 1) {
      total += weight[i] * one_component_count(parts.front());
    }
  }
  std::unique_lock lock(mutex_);
  one_component_memo_.try_emplace(std::move(form.key.bytes), total);
  return total;
}

Rational ForestEngine::single_component_probability(const Graph& g) {
  const ComponentSplit split = components(g);
  if (split.parts.empty()) {
    throw Error(ErrorCode::EmptyGraph, "one-component probability needs at least one edge");
  }
  if (split.parts.size() > 1) {
    throw Error(ErrorCode::DisconnectedInput,
                "graph has " + std::to_string(split.parts.size()) + " components with edges");
  }
  const Graph& part = split.parts.front().graph;
  if (part.vertex_count() > options_.canonical_cap) {
    throw Error(ErrorCode::SizeCapExceeded, "component exceeds the canonical labeling cap");
  }
  const BigInt count = one_component_count(to_bit_graph(part));
  return make_rational(count, factorial(static_cast<long>(part.edge_count())));
}

ForestDistribution forest_polynomial(const Graph& g) {
  ForestEngine engine;
  return engine.polynomial(g);
}

Rational single_component_probability(const Graph& g) {
  ForestEngine engine;
  return engine.single_component_probability(g);
}

}  // namespace forest
