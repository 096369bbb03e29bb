#include <doctest.h>

#include <cmath>
#include <random>

#include "forest/closed_forms.hpp"
#include "forest/engine.hpp"
#include "forest/error.hpp"
#include "forest/generators.hpp"
#include "forest/monte_carlo.hpp"
#include "forest/process.hpp"
#include "forest/rng.hpp"

using namespace forest;

namespace {

double to_double(const Rational& q) { return q.get_d(); }

void check_calibrated(const Graph& g, std::uint64_t trials, std::uint64_t seed) {
  const auto est = estimate_distribution(g, trials, seed);
  const auto exact = forest_polynomial(g);
  std::uint64_t total = 0;
  for (const auto& [k, c] : est.counts) {
    total += c;
    CHECK(exact.probs.count(k) == 1);
  }
  CHECK(total == trials);
  for (const auto& [k, p] : exact.probs) {
    const double pk = to_double(p);
    CHECK(std::abs(est.probability(k) - pk) <= 4 * binomial_sigma(pk, trials));
  }
}

}  // namespace

TEST_CASE("SplitMix64 reference values") {
  // First outputs for seed 1234567 from the published reference implementation.
  SplitMix64 rng(1234567);
  CHECK(rng() == 6457827717110365317ULL);
  CHECK(rng() == 3203168211198807973ULL);
  CHECK(rng() == 9817491932198370423ULL);

  SplitMix64 bounded(3);
  std::vector<int> hist(6);
  for (int i = 0; i < 60000; ++i) ++hist[bounded.below(6)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("estimate_distribution") {
  const Graph k3 = generate(family::Complete{3});
  const auto tri = estimate_distribution(k3, 1000, 1);
  CHECK(tri.counts == std::map<int, std::uint64_t>{{1, 1000}});
  CHECK(tri.mean_kappa == 1.0);
  CHECK(tri.stderr_kappa == 0.0);

  const Graph c4 = generate(family::CompleteBipartite{2, 2});
  const auto est = estimate_distribution(c4, 100000, 42);
  CHECK(std::abs(est.probability(2) - 1.0 / 3) <= 4 * binomial_sigma(1.0 / 3, 100000));
  CHECK(est == estimate_distribution(c4, 100000, 42));
  CHECK(est == estimate_distribution(c4, 100000, 42, 4));
  CHECK_FALSE(est == estimate_distribution(c4, 100000, 43));

  CHECK_THROWS_AS(estimate_distribution(Graph(3), 10, 1), Error);
  CHECK_THROWS_AS(estimate_distribution(c4, 0, 1), Error);
}

TEST_CASE("estimates are unbiased at one million trials") {
  const auto est = estimate_distribution(generate(family::CompleteBipartite{2, 2}), 1000000, 2024, 2);
  CHECK(std::abs(est.probability(2) - 1.0 / 3) < 0.005);
}

TEST_CASE("calibration against exact distributions") {
  check_calibrated(generate(family::CompleteBipartite{2, 3}), 100000, 5);
  check_calibrated(generate(family::Cycle{5}), 100000, 6);
  check_calibrated(generate(family::Path{5}), 100000, 7);
  check_calibrated(generate(family::CompleteMultipartite{{2, 2, 2}}), 100000, 8);
}

TEST_CASE("mean component count tracks the edge sum") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const int n = 4 + static_cast<int>(s % 4);
    const Graph g = generate(family::Gnm{n, n + 2, 100 + s});
    const auto est = estimate_distribution(g, 100000, s);
    const double exact = to_double(expected_components(g));
    CHECK(std::abs(est.mean_kappa - exact) <= 4 * est.stderr_kappa + 1e-12);
  }
}

TEST_CASE("G(n,m) simulation") {
  const auto est = estimate_gnm_expectation(6, 8, 2000, 10, 3);
  CHECK(est.draws == 20000);
  CHECK(std::abs(est.mean - to_double(gnm_expected_components(6, 8))) <= 4 * est.standard_error);
  CHECK(est == estimate_gnm_expectation(6, 8, 2000, 10, 3, 3));

  const auto single = estimate_gnm_expectation(7, 1, 50, 5, 1);
  CHECK(single.mean == 1.0);
  CHECK(single.standard_error == 0.0);

  const auto full = estimate_gnm_expectation(5, 10, 200, 50, 9);
  CHECK(std::abs(full.mean - to_double(complete_distribution(5).mean())) <= 4 * full.standard_error);
  CHECK_THROWS_AS(estimate_gnm_expectation(4, 7, 1, 1, 1), Error);
  CHECK_THROWS_AS(estimate_gnm_expectation(4, 3, 0, 1, 1), Error);
}

TEST_CASE("single component decay") {
  const std::vector<int> cycle{4};
  const auto rows = single_component_decay(2, cycle, 100000, 11);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].p1_hat - 2.0 / 3) <= 4 * binomial_sigma(2.0 / 3, 100000));
  CHECK(rows[0].cheeger.has_value());

  const std::vector<int> ns{10, 6, 8};
  const auto cubic = single_component_decay(3, ns, 20000, 4);
  REQUIRE(cubic.size() == 3);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    CHECK(cubic[i].n == ns[i]);
    CHECK(cubic[i].hits > 0);
    CHECK(std::isfinite(cubic[i].neg_log_p1_over_n));
    CHECK(cubic[i].neg_log_p1_over_n > 0);
  }
  const auto again = single_component_decay(3, ns, 20000, 4, 3);
  for (std::size_t i = 0; i < ns.size(); ++i) CHECK(again[i].hits == cubic[i].hits);

  const std::vector<int> big{22};
  CHECK_FALSE(single_component_decay(3, big, 10, 1)[0].cheeger.has_value());
  const std::vector<int> odd{7};
  CHECK_THROWS_AS(single_component_decay(3, odd, 10, 1), Error);

  const std::string csv = decay_csv(cubic);
  CHECK(csv.rfind("n,p1_hat,neg_log_p1_over_n,cheeger\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
