#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "forest/distribution.hpp"
#include "forest/graph.hpp"
#include "forest/rational.hpp"

namespace forest {

/// A permutation of a graph's EdgeIds: the order edges are revealed in.
using EdgeOrdering = std::vector<EdgeId>;

struct ProcessResult {
  /// Kept edges in the order they were kept.
  std::vector<EdgeId> kept;
  /// Trees in the kept forest; isolated vertices are not counted.
  int kappa = 0;
};

/// Scans `ordering`, keeping each edge that touches a vertex no earlier edge
/// touched. Throws Error{InvalidOrdering} unless `ordering` is a permutation
/// of g's edges.
ProcessResult run_process(const Graph& g, std::span<const EdgeId> ordering);

/// Component count only, without validation. `seen` is scratch space resized
/// to g.vertex_count().
int process_kappa(const Graph& g, std::span<const std::uint32_t> ordering, std::vector<char>& seen);

inline constexpr std::size_t kBruteForceEdgeCap = 10;

/// Exact distribution by walking every edge ordering. Orderings sharing a
/// prefix share work, and once every vertex has been touched the remaining
/// suffixes are counted in one step. Throws Error{TooManyEdges} for m > 10.
ForestDistribution brute_force_distribution(const Graph& g);

/// Sum over edges uv of 1 / (d(u) + d(v) - 1). Throws Error{EmptyGraph}.
Rational expected_components(const Graph& g);

}  // namespace forest
