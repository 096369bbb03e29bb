#include <doctest.h>

#include <cmath>

#include "forest/closed_forms.hpp"
#include "forest/engine.hpp"
#include "forest/error.hpp"
#include "forest/generators.hpp"
#include "forest/process.hpp"
#include "oracles.hpp"

using namespace forest;

namespace {

ForestDistribution dist(int n, int m, std::map<int, Rational> probs) { return ForestDistribution{n, m, probs}; }

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST_CASE("complete graph distribution") {
  CHECK(complete_distribution(2) == dist(2, 1, {{1, 1}}));
  CHECK(complete_distribution(3) == dist(3, 3, {{1, 1}}));
  CHECK(complete_distribution(4) == dist(4, 6, {{1, q(4, 5)}, {2, q(1, 5)}}));
  CHECK(code_of([] { complete_distribution(1); }) == ErrorCode::InvalidSize);

  ForestEngine engine;
  for (int n = 2; n <= 6; ++n) CHECK(complete_distribution(n) == engine.polynomial(generate(family::Complete{n})));
  for (int n = 2; n <= 12; ++n) CHECK(complete_distribution(n).mean() == q(n * (n - 1), 4 * n - 6));
}

TEST_CASE("complete bipartite distribution") {
  CHECK(bipartite_distribution(2, 2) == dist(4, 4, {{1, q(2, 3)}, {2, q(1, 3)}}));
  CHECK(bipartite_distribution(2, 3) == dist(5, 6, {{1, q(1, 2)}, {2, q(1, 2)}}));
  for (int t = 1; t <= 6; ++t) CHECK(bipartite_distribution(1, t).probs == std::map<int, Rational>{{1, 1}});
  CHECK(code_of([] { bipartite_distribution(0, 3); }) == ErrorCode::InvalidSize);

  ForestEngine engine;
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; s + t <= 7; ++t)
      CHECK(bipartite_distribution(s, t) == engine.polynomial(generate(family::CompleteBipartite{s, t})));
  for (int s = 1; s <= 8; ++s)
    for (int t = 1; t <= 8; ++t) CHECK(bipartite_distribution(s, t).mean() == q(s * t, s + t - 1));
}

TEST_CASE("bipartite Q closed form") {
  for (int a = 0; a <= 3; ++a) CHECK(bipartite_Q(3, 3, a, 0, 0) == 1);
  CHECK(bipartite_Q(3, 3, 2, 0, 2) == 0);
  CHECK(bipartite_Q(2, 2, 2, 2, 1) == q(2, 3));
  CHECK(bipartite_Q(2, 2, 2, 2, -1) == 0);
  CHECK(code_of([] { bipartite_Q(2, 2, 3, 0, 0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { bipartite_Q(2, 2, 0, 0, -2); }) == ErrorCode::ParameterOutOfRange);

  for (int s = 1; s <= 8; ++s) {
    for (int t = 1; t <= 8; ++t) {
      for (int k = 1; k <= std::min(s, t); ++k) REQUIRE(bipartite_Q(s, t, s, t, k) == bipartite_distribution(s, t).probability(k));
      for (int a = 0; a <= s; ++a) {
        for (int b = 0; b <= t; ++b) {
          for (int l = -1; l <= std::max(s, t); ++l) {
            const Rational value = bipartite_Q(s, t, a, b, l);
            REQUIRE(value == bipartite_Q_alternate(s, t, a, b, l));
            if (b == 0 && l >= 0) REQUIRE(value == (l == 0 ? 1 : 0));
            const long denom = long(a) * t + long(b) * s - long(a) * b;
            if (denom <= 0 || l < 0) continue;
            Rational rhs = 0;
            if (a > 0 && t - b != 0) rhs += Rational(a * (t - b)) * bipartite_Q(s, t, a - 1, b, l);
            if (b > 0 && s - a != 0) rhs += Rational((s - a) * b) * bipartite_Q(s, t, a, b - 1, l);
            if (a > 0 && b > 0) rhs += Rational(a * b) * bipartite_Q(s, t, a - 1, b - 1, l - 1);
            REQUIRE(value == rhs / denom);
          }
        }
      }
    }
  }
}

TEST_CASE("closed expectations") {
  CHECK(expected_components_closed(CompleteFamily{3}) == 1);
  CHECK(expected_components_closed(CompleteBipartiteFamily{2, 2}) == q(4, 3));
  for (int n = 2; n <= 8; ++n)
    CHECK(expected_components_closed(CompleteFamily{n}) == expected_components(generate(family::Complete{n})));
  CHECK(code_of([] { expected_components_closed(CompleteFamily{1}); }) == ErrorCode::InvalidSize);
}

TEST_CASE("G(n,m) expectation") {
  for (int n = 2; n <= 10; ++n) {
    const int full = n * (n - 1) / 2;
    CHECK(gnm_expected_components(n, full) == q(n * (n - 1), 4 * n - 6));
    CHECK(gnm_expectation_lower_bound(n, full) <= gnm_expected_components(n, full));
  }
  CHECK(gnm_expected_components(5, 1) == 1);
  CHECK(gnm_expectation_lower_bound(3, 3) == 1);
  CHECK(gnm_expectation_lower_bound(4, 3) <= gnm_expected_components(4, 3));
  CHECK(code_of([] { gnm_expected_components(4, 7); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { gnm_expected_components(4, 0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { gnm_expectation_lower_bound(1, 1); }) == ErrorCode::ParameterOutOfRange);

  // Average over every labeled graph, using the engine's exact mean.
  for (int n = 2; n <= 5; ++n) {
    const int full = n * (n - 1) / 2;
    if (full > 10) continue;
    for (int m = 1; m <= std::min(full, 6); ++m) {
      Rational sum = 0;
      long count = 0;
      oracle::for_each_labeled(n, m, [&](const Graph& g) {
        sum += oracle::edge_sum(g);
        ++count;
      });
      CHECK(gnm_expected_components(n, m) == sum / count);
    }
  }
}

TEST_CASE("path distribution") {
  CHECK(path_distribution(1) == dist(2, 1, {{1, 1}}));
  CHECK(path_distribution(2) == dist(3, 2, {{1, 1}}));
  CHECK(path_distribution(3) == dist(4, 3, {{1, q(2, 3)}, {2, q(1, 3)}}));
  CHECK(code_of([] { path_distribution(0); }) == ErrorCode::InvalidSize);
  ForestEngine engine;
  for (int n = 1; n <= 14; ++n) CHECK(path_distribution(n) == engine.polynomial(generate(family::Path{n + 1})));
}

TEST_CASE("path series") {
  const auto two = path_series_coefficients(2.0, 4);
  REQUIRE(two.coeffs.size() == 4);
  CHECK(two.coeffs[0] == doctest::Approx(1.0));
  CHECK(two.coeffs[1] == doctest::Approx(2.0));
  for (double x : {1.5, 2.0, 5.0, 11.0}) {
    const auto s = path_series_coefficients(x, 12);
    CHECK(s.coeffs[0] == doctest::Approx(1.0));
    for (int n = 1; n <= 10; ++n) {
      const double exact = evaluate_polynomial(path_distribution(n), x);
      CHECK(std::abs(s.coeffs[n] - exact) <= kSeriesRelativeTolerance * std::abs(exact));
    }
  }
  // The truncated series reproduces the closed form at small t.
  for (double x : {2.0, 5.0}) {
    const double c = std::sqrt(x - 1);
    const auto s = path_series_coefficients(x, 40);
    const double t = 0.05;
    double sum = 0, power = 1;
    for (double a : s.coeffs) {
      sum += a * power;
      power *= t;
    }
    CHECK(sum == doctest::Approx(c * std::tan(t * c + std::atan(1 / c))).epsilon(1e-12));
  }
  CHECK(code_of([] { path_series_coefficients(1.0, 3); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { path_series_coefficients(2.0, 0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("matching identity") {
  CHECK(matching_identity_lhs(0) == 1);
  CHECK(matching_identity_lhs(2) == 6);
  CHECK(matching_identity_lhs(10) == 184756);
  for (int N = 0; N <= 30; ++N) CHECK(matching_identity_lhs(N) == binomial(2 * N, N));
}

TEST_CASE("cycle one-component probability") {
  CHECK(cycle_single_component(3) == 1);
  CHECK(cycle_single_component(4) == q(2, 3));
  CHECK(cycle_single_component(6) == q(2, 15));
  CHECK(code_of([] { cycle_single_component(2); }) == ErrorCode::InvalidSize);
  for (int n = 3; n <= 10; ++n)
    CHECK(cycle_single_component(n) == single_component_probability(generate(family::Cycle{n})));
}
