#pragma once

#include <span>
#include <string>
#include <vector>

#include "forest/canonical.hpp"
#include "forest/distribution.hpp"
#include "forest/engine.hpp"
#include "forest/graph.hpp"

namespace forest {

inline constexpr int kGraphEnumerationCap = 7;
inline constexpr int kTreeEnumerationCap = 10;
inline constexpr int kPruferEnumerationCap = 9;

/// One representative (in canonical labeling) per isomorphism class of
/// graphs on n vertices, built level by level by adding one edge to every
/// class of the previous level. Sorted by edge count, then canonical key.
/// Throws Error{SizeCapExceeded} for n > 7.
std::vector<Graph> enumerate_graphs(int n);

/// Connected classes on n vertices, 2 <= n <= 7, same order as enumerate_graphs.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Connected classes with 1..max_edges edges on any number of vertices.
/// Every connected graph with m >= 2 edges drops to one with m - 1 edges by
/// deleting a leaf or a cycle edge, so growing by "new edge inside" or "new
/// pendant vertex" reaches every class. Sorted by edge count, then key.
std::vector<Graph> enumerate_connected_by_edge_count(int max_edges);

/// Free trees on n vertices (1 <= n <= 10) by leaf extension with dedup.
std::vector<Graph> enumerate_trees(int n);

/// Labeled tree on seq.size() + 2 vertices encoded by a Prufer sequence.
Graph decode_prufer(std::span<const int> seq);

/// Free trees on n vertices from all n^(n-2) Prufer sequences, deduplicated.
/// Independent of enumerate_trees; n <= 9.
std::vector<Graph> enumerate_trees_prufer(int n);

struct PairReport {
  CanonicalKey key_a;
  CanonicalKey key_b;
  std::string graph6_a;
  std::string graph6_b;
  ForestDistribution shared_polynomial;
  /// One graph is edge-transitive and the other is it minus one edge.
  bool explained_by_edge_transitivity = false;
};

/// Unordered pairs of non-isomorphic connected n-vertex graphs with equal
/// polynomials. Graphs are bucketed by polynomial_signature first.
std::vector<PairReport> find_equal_polynomial_pairs(int n, ForestEngine& engine);

/// True when a is edge-transitive and b is isomorphic to a minus an edge,
/// or the other way round.
bool explained_by_edge_transitivity(const Graph& a, const Graph& b);

struct TwinReport {
  CanonicalKey key_a;
  CanonicalKey key_b;
  std::string graph6_a;
  std::string graph6_b;
  ForestDistribution polynomial_a;
  ForestDistribution polynomial_b;
  /// Shared expected component count.
  Rational expectation;
};

/// Connected n-vertex pairs whose multisets {d(u) + d(v) : uv in E} agree
/// but whose polynomials differ.
std::vector<TwinReport> find_edge_degree_twins(int n, ForestEngine& engine);

struct ConjectureResult {
  bool holds = false;
  ForestDistribution p_G;
  ForestDistribution p_K;
};

/// Compares K_{k,k+1} plus an edge in the larger part against K_{k,k+1}.
ConjectureResult check_conjecture(int k, ForestEngine& engine);

/// P(k)^2 >= P(k-1) P(k+1) for every k, missing coefficients read as zero.
bool is_log_concave(const ForestDistribution& d);
bool check_log_concavity(const Graph& g, ForestEngine& engine);

struct LogConcavityViolation {
  std::string graph6;
  ForestDistribution polynomial;
};

/// Every connected graph on 2..n_max vertices (n_max <= 7).
std::vector<LogConcavityViolation> sweep_log_concavity(int n_max, ForestEngine& engine);

/// Pairs of non-isomorphic n-vertex trees with equal polynomials.
std::vector<PairReport> find_tree_pairs(int n, ForestEngine& engine);

}  // namespace forest
