#pragma once

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "forest/bit_graph.hpp"
#include "forest/canonical.hpp"
#include "forest/distribution.hpp"
#include "forest/graph.hpp"
#include "forest/rational.hpp"

namespace forest {

struct EngineOptions {
  /// Reuse results across isomorphic subgraphs. Off means plain recursion
  /// over labeled subgraphs (exponential, for cross-checking only).
  bool memoize = true;
  /// Evaluate one deletion per edge orbit of the automorphisms found while
  /// canonicalizing and weight it by the orbit size.
  bool use_symmetry = true;
  int canonical_cap = kDefaultCanonicalCap;
  std::size_t max_memo_entries = 50'000'000;
};

/// Exact p_G(x) through the last-edge deletion recurrence
///
///   F(G, k) = sum over edges e of F(G - e, k)       (G connected, m >= 2)
///
/// where F(G, k) = m! P(G, k) counts orderings. Components multiply with an
/// interleaving factor, F(G + H) = C(m_G + m_H, m_G) F(G) * F(H), and a single
/// edge has F = x. Counts are exact integers throughout.
///
/// The memo is keyed by canonical form of connected components and is safe to
/// share between threads: concurrent inserts of one key store equal values.
class ForestEngine {
 public:
  explicit ForestEngine(EngineOptions options = {});

  ForestEngine(const ForestEngine&) = delete;
  ForestEngine& operator=(const ForestEngine&) = delete;

  /// Throws Error{SizeCapExceeded | MemoryBudgetExceeded}.
  ForestDistribution polynomial(const Graph& g);

  /// P(G, 1) by the one-component recurrence, which skips large bridges.
  /// Isolated vertices are ignored. Throws Error{DisconnectedInput} when the
  /// edges do not form one connected component, Error{EmptyGraph} with no edges.
  Rational single_component_probability(const Graph& g);

  std::size_t memo_size() const;
  const EngineOptions& options() const noexcept { return options_; }

 private:
  using Counts = std::vector<BigInt>;

  Counts component_counts(const BitGraph& component);
  Counts expand(const BitGraph& g, const std::vector<std::vector<int>>& automorphisms);
  Counts plain_counts(const BitGraph& component);
  BigInt one_component_count(const BitGraph& component);

  EngineOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Counts> memo_;
  std::unordered_map<std::string, BigInt> one_component_memo_;
};

/// Convenience wrappers using a fresh engine with default options.
ForestDistribution forest_polynomial(const Graph& g);
Rational single_component_probability(const Graph& g);

}  // namespace forest
