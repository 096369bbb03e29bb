#pragma once

#include <map>
#include <span>
#include <string>

#include "forest/rational.hpp"

namespace forest {

/// Law of the final component count: probs[k] = P(G, k), the coefficient of
/// x^k in p_G(x). Only nonzero coefficients are stored; an edgeless graph has
/// no coefficients at all and acts as the identity under convolve().
struct ForestDistribution {
  int n = 0;
  int m = 0;
  std::map<int, Rational> probs;

  Rational probability(int k) const;
  Rational total() const;
  /// Sum of k * P(G, k).
  Rational mean() const;

  friend bool operator==(const ForestDistribution&, const ForestDistribution&) = default;
};

/// Coefficientwise equality of the polynomials, ignoring n and m.
bool same_polynomial(const ForestDistribution& a, const ForestDistribution& b);

/// counts[k] is the number of edge orderings ending with k components.
ForestDistribution distribution_from_counts(int n, int m, std::span<const BigInt> counts);

/// Distribution of a disjoint union: component counts add.
ForestDistribution convolve(const ForestDistribution& a, const ForestDistribution& b);

/// Stable text form of the coefficients, e.g. "1:2/3,2:1/3".
std::string polynomial_signature(const ForestDistribution& d);

/// Human-readable polynomial, e.g. "2/3 x + 1/3 x^2".
std::string format_polynomial(const ForestDistribution& d);

}  // namespace forest
