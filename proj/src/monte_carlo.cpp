#include "forest/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "forest/error.hpp"
#include "forest/generators.hpp"
#include "forest/graph6.hpp"
#include "forest/process.hpp"
#include "forest/rng.hpp"
#include "forest/structure.hpp"

namespace forest {

namespace {

// Integer tallies merge exactly, so any split across threads gives the same totals.
struct Tally {
  std::vector<std::uint64_t> histogram;
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;

  void add(int kappa) {
    if (histogram.size() <= static_cast<std::size_t>(kappa)) {
      histogram.resize(kappa + 1, 0);
    }
    ++histogram[kappa];
    sum += kappa;
    sum_squares += static_cast<std::uint64_t>(kappa) * kappa;
  }

  void merge(const Tally& other) {
    if (histogram.size() < other.histogram.size()) {
      histogram.resize(other.histogram.size(), 0);
    }
    for (std::size_t k = 0; k < other.histogram.size(); ++k) {
      histogram[k] += other.histogram[k];
    }
    sum += other.sum;
    sum_squares += other.sum_squares;
  }
};

// Runs body(begin, end, tally) over [0, total) in contiguous blocks.
Tally run_blocks(std::uint64_t total, unsigned threads,
                 const std::function<void(std::uint64_t, std::uint64_t, Tally&)>& body) {
  threads = std::max(1U, threads);
  if (threads == 1 || total < 2 * threads) {
    Tally t;
    body(0, total, t);
    return t;
  }
  std::vector<Tally> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t begin = total * i / threads;
    const std::uint64_t end = total * (i + 1) / threads;
    workers.emplace_back([&, begin, end, i] { body(begin, end, partial[i]); });
  }
  for (auto& w : workers) {
    w.join();
  }
  Tally out;
  for (const auto& t : partial) {
    out.merge(t);
  }
  return out;
}

double mean_of(const Tally& t, std::uint64_t draws) { return static_cast<double>(t.sum) / static_cast<double>(draws); }

double stderr_of(const Tally& t, std::uint64_t draws) {
  const double n = static_cast<double>(draws);
  const double mean = static_cast<double>(t.sum) / n;
  const double variance = std::max(0.0, static_cast<double>(t.sum_squares) / n - mean * mean);
  return std::sqrt(variance / n);
}

void shuffled_kappas(const Graph& g, std::uint64_t seed, std::uint64_t begin, std::uint64_t end, Tally& out) {
  std::vector<std::uint32_t> order(g.edge_count());
  std::vector<char> seen;
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    std::iota(order.begin(), order.end(), 0U);
    SplitMix64 rng(stream_seed(seed, trial));
    shuffle(std::span(order), rng);
    out.add(process_kappa(g, order, seen));
  }
}

}  // namespace

double EstimatedDistribution::probability(int k) const {
  const auto it = counts.find(k);
  if (it == counts.end() || trials == 0) {
    return 0.0;
  }
  return static_cast<double>(it->second) / static_cast<double>(trials);
}

double binomial_sigma(double p, std::uint64_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

EstimatedDistribution estimate_distribution(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                            unsigned threads) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "simulation needs at least one edge");
  }
  if (trials == 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "trials must be positive");
  }
  const Tally t = run_blocks(trials, threads, [&](std::uint64_t begin, std::uint64_t end, Tally& out) {
    shuffled_kappas(g, seed, begin, end, out);
  });
  EstimatedDistribution d;
  d.trials = trials;
  d.seed = seed;
  for (std::size_t k = 0; k < t.histogram.size(); ++k) {
    if (t.histogram[k] != 0) {
      d.counts.emplace(static_cast<int>(k), t.histogram[k]);
    }
  }
  d.mean_kappa = mean_of(t, trials);
  d.stderr_kappa = stderr_of(t, trials);
  return d;
}

MeanEstimate estimate_gnm_expectation(int n, int m, std::uint64_t graph_samples,
                                      std::uint64_t orderings_per_graph, std::uint64_t seed, unsigned threads) {
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  if (n < 2 || m < 1 || m > pairs || graph_samples == 0 || orderings_per_graph == 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "G(n,m) simulation needs n >= 2, 1 <= m <= C(n,2), positive counts");
  }
  const Tally t = run_blocks(graph_samples, threads, [&](std::uint64_t begin, std::uint64_t end, Tally& out) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t graph_seed = stream_seed(seed, i);
      const Graph g = generate(family::Gnm{n, m, graph_seed});
      shuffled_kappas(g, mix64(graph_seed), 0, orderings_per_graph, out);
    }
  });
  const std::uint64_t draws = graph_samples * orderings_per_graph;
  return MeanEstimate{mean_of(t, draws), stderr_of(t, draws), draws};
}

std::vector<DecayRow> single_component_decay(int d, std::span<const int> n_values, std::uint64_t trials,
                                             std::uint64_t seed, unsigned threads) {
  for (int n : n_values) {
    if (d < 1 || d >= n || (static_cast<long>(n) * d) % 2 != 0) {
      throw Error(ErrorCode::InfeasibleSpec,
                  "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
    }
  }
  if (trials == 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "trials must be positive");
  }
  std::vector<DecayRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const int n = n_values[i];
    const std::uint64_t graph_seed = stream_seed(seed, i);
    const Graph g = generate(family::RandomRegular{n, d, graph_seed});
    const Tally t = run_blocks(trials, threads, [&](std::uint64_t begin, std::uint64_t end, Tally& out) {
      shuffled_kappas(g, mix64(graph_seed), begin, end, out);
    });
    DecayRow row;
    row.n = n;
    row.trials = trials;
    row.hits = t.histogram.size() > 1 ? t.histogram[1] : 0;
    row.p1_hat = static_cast<double>(row.hits) / static_cast<double>(trials);
    row.neg_log_p1_over_n =
        row.hits == 0 ? std::numeric_limits<double>::infinity() : -std::log(row.p1_hat) / static_cast<double>(n);
    if (n <= kCheegerVertexCap) {
      row.cheeger = cheeger_constant(g);
    }
    row.graph6 = serialize_graph6(g);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string decay_csv(std::span<const DecayRow> rows) {
  std::ostringstream out;
  out.precision(17);
  out << "n,p1_hat,neg_log_p1_over_n,cheeger\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.p1_hat << ',' << row.neg_log_p1_over_n << ',';
    if (row.cheeger) {
      out << format_rational(*row.cheeger);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace forest
