#include "forest/process.hpp"

#include <bit>

#include "forest/error.hpp"

namespace forest {

ProcessResult run_process(const Graph& g, std::span<const EdgeId> ordering) {
  const std::size_t m = g.edge_count();
  if (ordering.size() != m) {
    throw Error(ErrorCode::InvalidOrdering,
                "ordering has " + std::to_string(ordering.size()) + " entries for " + std::to_string(m) + " edges");
  }
  std::vector<char> listed(m, 0);
  for (EdgeId id : ordering) {
    if (id.index >= m || listed[id.index]) {
      throw Error(ErrorCode::InvalidOrdering, "not a permutation of the edge ids");
    }
    listed[id.index] = 1;
  }

  ProcessResult out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (EdgeId id : ordering) {
    const Edge& e = g.edge(id);
    const bool fresh_u = !seen[e.u];
    const bool fresh_v = !seen[e.v];
    if (fresh_u || fresh_v) {
      out.kept.push_back(id);
      if (fresh_u && fresh_v) {
        ++out.kappa;
      }
      seen[e.u] = seen[e.v] = 1;
    }
  }
  return out;
}

int process_kappa(const Graph& g, std::span<const std::uint32_t> ordering, std::vector<char>& seen) {
  seen.assign(g.vertex_count(), 0);
  int kappa = 0;
  const auto& edges = g.edges();
  for (std::uint32_t i : ordering) {
    const Edge& e = edges[i];
    kappa += (!seen[e.u] && !seen[e.v]) ? 1 : 0;
    seen[e.u] = seen[e.v] = 1;
  }
  return kappa;
}

namespace {

struct BruteForce {
  std::vector<std::uint64_t> endpoints;  // per edge: mask of its two (compressed) vertices
  std::uint64_t covered = 0;
  std::vector<BigInt> suffix_orderings;  // r! for r remaining edges
  std::vector<BigInt> counts;

  void walk(std::uint32_t remaining, std::uint64_t seen, int kappa) {
    if (seen == covered) {
      // Every later edge is discarded whatever its position.
      counts[kappa] += suffix_orderings[std::popcount(remaining)];
      return;
    }
    for (std::uint32_t r = remaining; r; r &= r - 1) {
      const int e = std::countr_zero(r);
      const std::uint64_t ends = endpoints[e];
      const int opens = (seen & ends) == 0 ? 1 : 0;
      walk(remaining & ~(std::uint32_t{1} << e), seen | ends, kappa + opens);
    }
  }
};

}  // namespace

ForestDistribution brute_force_distribution(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kBruteForceEdgeCap) {
    throw Error(ErrorCode::TooManyEdges, "brute force is capped at " + std::to_string(kBruteForceEdgeCap) +
                                             " edges, got " + std::to_string(m));
  }
  if (m == 0) {
    return ForestDistribution{g.vertex_count(), 0, {}};
  }
  // At most 2m <= 20 covered vertices, so they fit a 64-bit mask once renumbered.
  std::vector<int> local(g.vertex_count(), -1);
  int next = 0;
  for (const auto& e : g.edges()) {
    for (Vertex v : {e.u, e.v}) {
      if (local[v] < 0) {
        local[v] = next++;
      }
    }
  }
  BruteForce bf;
  for (const auto& e : g.edges()) {
    bf.endpoints.push_back((std::uint64_t{1} << local[e.u]) | (std::uint64_t{1} << local[e.v]));
  }
  bf.covered = (std::uint64_t{1} << next) - 1;
  for (std::size_t r = 0; r <= m; ++r) {
    bf.suffix_orderings.push_back(factorial(static_cast<long>(r)));
  }
  bf.counts.assign(m + 1, 0);
  bf.walk((std::uint32_t{1} << m) - 1, 0, 0);
  return distribution_from_counts(g.vertex_count(), static_cast<int>(m), bf.counts);
}

Rational expected_components(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "expected component count needs at least one edge");
  }
  Rational sum = 0;
  for (const auto& e : g.edges()) {
    sum += Rational(1, g.degree(e.u) + g.degree(e.v) - 1);
  }
  sum.canonicalize();
  return sum;
}

}  // namespace forest
