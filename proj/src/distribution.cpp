#include "forest/distribution.hpp"

#include <sstream>

namespace forest {

Rational ForestDistribution::probability(int k) const {
  const auto it = probs.find(k);
  return it == probs.end() ? Rational(0) : it->second;
}

Rational ForestDistribution::total() const {
  Rational sum = 0;
  for (const auto& [k, p] : probs) {
    sum += p;
  }
  return sum;
}

Rational ForestDistribution::mean() const {
  Rational sum = 0;
  for (const auto& [k, p] : probs) {
    sum += p * k;
  }
  return sum;
}

bool same_polynomial(const ForestDistribution& a, const ForestDistribution& b) { return a.probs == b.probs; }

ForestDistribution distribution_from_counts(int n, int m, std::span<const BigInt> counts) {
  ForestDistribution d{n, m, {}};
  if (m == 0) {
    return d;
  }
  const BigInt orderings = factorial(m);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) {
      d.probs.emplace(static_cast<int>(k), make_rational(counts[k], orderings));
    }
  }
  return d;
}

ForestDistribution convolve(const ForestDistribution& a, const ForestDistribution& b) {
  ForestDistribution out{a.n + b.n, a.m + b.m, {}};
  if (a.m == 0) {
    out.probs = b.probs;
    return out;
  }
  if (b.m == 0) {
    out.probs = a.probs;
    return out;
  }
  for (const auto& [i, p] : a.probs) {
    for (const auto& [j, q] : b.probs) {
      out.probs[i + j] += p * q;
    }
  }
  return out;
}

std::string polynomial_signature(const ForestDistribution& d) {
  std::string out;
  for (const auto& [k, p] : d.probs) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(k) + ':' + format_rational(p);
  }
  return out;
}

std::string format_polynomial(const ForestDistribution& d) {
  if (d.probs.empty()) {
    return "1";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, p] : d.probs) {
    if (!first) {
      out << " + ";
    }
    first = false;
    out << format_rational(p);
    if (k == 1) {
      out << " x";
    } else if (k > 1) {
      out << " x^" << k;
    }
  }
  return out.str();
}

}  // namespace forest
