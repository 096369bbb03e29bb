#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "forest/bit_graph.hpp"
#include "forest/graph.hpp"

namespace forest {

inline constexpr int kDefaultCanonicalCap = 16;

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};

struct CanonicalForm {
  CanonicalKey key;
  /// The input relabeled into canonical order.
  BitGraph graph;
  /// order[i] is the input vertex placed at canonical position i.
  std::vector<int> order;
  /// Automorphisms discovered while searching, as permutations of the
  /// canonical labels. They generate a subgroup of Aut(graph), possibly all of it.
  std::vector<std::vector<int>> automorphisms;
};

/// Canonical labeling by equitable partition refinement and a
/// individualization search that keeps the lexicographically smallest
/// adjacency matrix, with orbit pruning from automorphisms found on the way.
/// Throws Error{SizeCapExceeded} when g.n > cap (cap itself at most 32).
CanonicalForm canonical_form(const BitGraph& g, int cap = kDefaultCanonicalCap);

/// Cell index of each vertex in the coarsest equitable partition. Vertices
/// in the same automorphism orbit always share a color.
std::vector<int> equitable_colors(const BitGraph& g);

CanonicalKey canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);
CanonicalKey canonical_key(const BitGraph& g, int cap = kDefaultCanonicalCap);

}  // namespace forest
