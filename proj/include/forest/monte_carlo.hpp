#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forest/graph.hpp"
#include "forest/rational.hpp"

namespace forest {

/// Empirical law of the component count.
struct EstimatedDistribution {
  std::uint64_t trials = 0;
  std::map<int, std::uint64_t> counts;
  double mean_kappa = 0.0;
  /// sqrt(sample variance / trials).
  double stderr_kappa = 0.0;
  std::uint64_t seed = 0;

  double probability(int k) const;

  friend bool operator==(const EstimatedDistribution&, const EstimatedDistribution&) = default;
};

/// Standard deviation of a frequency over `trials` draws with success probability p.
double binomial_sigma(double p, std::uint64_t trials);

/// Trial i shuffles the edges with the stream stream_seed(seed, i), so the
/// result does not depend on `threads`. Throws Error{EmptyGraph} or
/// Error{ParameterOutOfRange} when trials is zero.
EstimatedDistribution estimate_distribution(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                            unsigned threads = 1);

struct MeanEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t draws = 0;

  friend bool operator==(const MeanEstimate&, const MeanEstimate&) = default;
};

/// Mean component count over `graph_samples` draws from G(n, m), each run
/// under `orderings_per_graph` uniform orderings.
/// Throws Error{ParameterOutOfRange}.
MeanEstimate estimate_gnm_expectation(int n, int m, std::uint64_t graph_samples,
                                      std::uint64_t orderings_per_graph, std::uint64_t seed,
                                      unsigned threads = 1);

struct DecayRow {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;  ///< trials that ended with a single tree
  double p1_hat = 0.0;
  /// -log(p1_hat) / n; +infinity when no trial produced one tree.
  double neg_log_p1_over_n = 0.0;
  /// Present when n is within the exhaustive Cheeger enumeration cap.
  std::optional<Rational> cheeger;
  std::string graph6;
};

/// For each n: one random d-regular graph, `trials` orderings, and the
/// fraction ending in one component. Rows follow `n_values`.
/// Throws Error{InfeasibleSpec} when some n*d is odd or d >= n.
std::vector<DecayRow> single_component_decay(int d, std::span<const int> n_values, std::uint64_t trials,
                                             std::uint64_t seed, unsigned threads = 1);

/// CSV with header "n,p1_hat,neg_log_p1_over_n,cheeger".
std::string decay_csv(std::span<const DecayRow> rows);

}  // namespace forest
