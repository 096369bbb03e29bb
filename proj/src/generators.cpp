#include "forest/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "forest/error.hpp"
#include "forest/rng.hpp"

namespace forest {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw Error(ErrorCode::InfeasibleSpec, what);
  }
}

Graph multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "every part needs at least one vertex");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  Graph g(static_cast<int>(part_of.size()));
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (part_of[u] != part_of[v]) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph build(const family::Complete& f) {
  require(f.n >= 1, "K_n needs n >= 1");
  return multipartite(std::vector<int>(f.n, 1));
}

Graph build(const family::CompleteBipartite& f) {
  require(f.s >= 1 && f.t >= 1, "K_{s,t} needs s, t >= 1");
  return multipartite({f.s, f.t});
}

Graph build(const family::CompleteMultipartite& f) {
  require(!f.parts.empty(), "multipartite graph needs at least one part");
  return multipartite(f.parts);
}

Graph build(const family::Path& f) {
  require(f.n >= 1, "P_n needs n >= 1");
  Graph g(f.n);
  for (int v = 0; v + 1 < f.n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

Graph build(const family::Cycle& f) {
  require(f.n >= 3, "C_n needs n >= 3");
  Graph g(f.n);
  for (int v = 0; v < f.n; ++v) {
    g.add_edge(v, (v + 1) % f.n);
  }
  return g;
}

Graph build(const family::Star& f) {
  require(f.s >= 1, "K_{1,s} needs s >= 1");
  Graph g(f.s + 1);
  for (int v = 1; v <= f.s; ++v) {
    g.add_edge(0, v);
  }
  return g;
}

Graph build(const family::BalancedBipartitePlusEdge& f) {
  require(f.k >= 1, "G_{2k+1} needs k >= 1");
  Graph g = multipartite({f.k, f.k + 1});
  g.add_edge(f.k, f.k + 1);
  return g;
}

Graph build(const family::Gnm& f) {
  require(f.n >= 1, "G(n,m) needs n >= 1");
  const long pairs = static_cast<long>(f.n) * (f.n - 1) / 2;
  require(f.m >= 0 && f.m <= pairs, "G(n,m) needs 0 <= m <= C(n,2)");
  std::vector<std::pair<int, int>> all;
  all.reserve(pairs);
  for (int u = 0; u < f.n; ++u) {
    for (int v = u + 1; v < f.n; ++v) {
      all.emplace_back(u, v);
    }
  }
  SplitMix64 rng(f.seed);
  // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
  for (int i = 0; i < f.m; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(all.size() - i));
    std::swap(all[i], all[j]);
  }
  std::sort(all.begin(), all.begin() + f.m);
  return Graph::from_edge_list(f.n, std::span(all.data(), f.m));
}

Graph build(const family::RandomRegular& f) {
  require(f.n >= 1 && f.d >= 0, "random regular graph needs n >= 1, d >= 0");
  require(f.d < f.n, "random regular graph needs d < n");
  require((static_cast<long>(f.n) * f.d) % 2 == 0, "random regular graph needs n*d even");
  std::vector<int> points(static_cast<std::size_t>(f.n) * f.d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i] = static_cast<int>(i / f.d);
  }
  SplitMix64 rng(f.seed);
  for (int attempt = 0; attempt < kRegularRetryCap; ++attempt) {
    shuffle(std::span(points), rng);
    Graph g(f.n);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      const int u = points[i];
      const int v = points[i + 1];
      if (u == v || g.has_edge(u, v)) {
        simple = false;
      } else {
        g.add_edge(std::min(u, v), std::max(u, v));
      }
    }
    if (simple) {
      return g;
    }
  }
  throw Error(ErrorCode::GenerationTimeout,
              "no simple pairing after " + std::to_string(kRegularRetryCap) + " attempts");
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  return std::visit([](const auto& f) { return build(f); }, spec);
}

}  // namespace forest
