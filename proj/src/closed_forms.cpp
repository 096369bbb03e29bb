#include "forest/closed_forms.hpp"

#include <cmath>

#include "forest/error.hpp"

namespace forest {

namespace {

BigInt pow2(long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

Rational ratio(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

}  // namespace

ForestDistribution complete_distribution(int n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidSize, "K_n needs n >= 2");
  }
  ForestDistribution d{n, n * (n - 1) / 2, {}};
  const BigInt den = binomial(2L * n - 2, n);
  for (int k = 1; 2 * k <= n; ++k) {
    const BigInt multinomial = factorial(n - 1) / (factorial(n - 2 * k) * factorial(k) * factorial(k - 1));
    d.probs.emplace(k, ratio(multinomial * pow2(n - 2 * k), den));
  }
  return d;
}

ForestDistribution bipartite_distribution(int s, int t) {
  if (s < 1 || t < 1) {
    throw Error(ErrorCode::InvalidSize, "K_{s,t} needs s, t >= 1");
  }
  ForestDistribution d{s + t, s * t, {}};
  const BigInt den = BigInt(s) * t * binomial(s + t, s);
  for (int k = 1; k <= std::min(s, t); ++k) {
    d.probs.emplace(k, ratio(BigInt(k) * (s + t) * binomial(s, k) * binomial(t, k), den));
  }
  return d;
}

namespace {

void check_q_range(int s, int t, int a, int b, int l) {
  if (s < 1 || t < 1 || a < 0 || a > s || b < 0 || b > t || l < -1) {
    throw Error(ErrorCode::ParameterOutOfRange, "Q needs 0 <= a <= s, 0 <= b <= t, l >= -1");
  }
}

}  // namespace

Rational bipartite_Q(int s, int t, int a, int b, int l) {
  check_q_range(s, t, a, b, l);
  if (l < 0) {
    return 0;
  }
  return ratio(binomial(b, l) * binomial(s + t - b - 1, a - l), binomial(s + t - 1, a));
}

Rational bipartite_Q_alternate(int s, int t, int a, int b, int l) {
  check_q_range(s, t, a, b, l);
  if (l < 0) {
    return 0;
  }
  return ratio(binomial(a, l) * binomial(s + t - a - 1, b - l), binomial(s + t - 1, b));
}

Rational expected_components_closed(const ClosedFamily& family) {
  if (const auto* k = std::get_if<CompleteFamily>(&family)) {
    if (k->n < 2) {
      throw Error(ErrorCode::InvalidSize, "K_n needs n >= 2");
    }
    return ratio(BigInt(k->n) * (k->n - 1), BigInt(4 * k->n - 6));
  }
  const auto& kst = std::get<CompleteBipartiteFamily>(family);
  if (kst.s < 1 || kst.t < 1) {
    throw Error(ErrorCode::InvalidSize, "K_{s,t} needs s, t >= 1");
  }
  return ratio(BigInt(kst.s) * kst.t, BigInt(kst.s + kst.t - 1));
}

Rational gnm_expected_components(int n, int m) {
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  if (n < 2 || m < 1 || m > pairs) {
    throw Error(ErrorCode::ParameterOutOfRange, "G(n,m) needs n >= 2 and 1 <= m <= C(n,2)");
  }
  const long draws = 2L * n - 3;
  const Rational missing = ratio(binomial(pairs - m, draws), binomial(pairs, draws));
  return ratio(BigInt(pairs), BigInt(draws)) * (Rational(1) - missing);
}

Rational gnm_expectation_lower_bound(int n, int m) {
  if (n < 2 || m < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "bound needs n >= 2 and m >= 1");
  }
  return ratio(BigInt(m) * n + m, BigInt(4L * m + n - 3));
}

ForestDistribution path_distribution(int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidSize, "path needs at least one edge");
  }
  // f[j] holds the coefficients of f_j(x) indexed by power of x.
  std::vector<std::vector<Rational>> f(n + 1);
  f[0] = {Rational(1)};
  f[1] = {Rational(0), Rational(1)};
  for (int j = 2; j <= n; ++j) {
    std::vector<Rational> sum;
    for (int i = 0; i < j; ++i) {
      const auto& a = f[i];
      const auto& b = f[j - 1 - i];
      if (sum.size() < a.size() + b.size() - 1) {
        sum.resize(a.size() + b.size() - 1, 0);
      }
      for (std::size_t p = 0; p < a.size(); ++p) {
        for (std::size_t q = 0; q < b.size(); ++q) {
          sum[p + q] += a[p] * b[q];
        }
      }
    }
    for (auto& c : sum) {
      c /= j;
    }
    f[j] = std::move(sum);
  }
  ForestDistribution d{n + 1, n, {}};
  for (std::size_t k = 0; k < f[n].size(); ++k) {
    if (f[n][k] != 0) {
      d.probs.emplace(static_cast<int>(k), f[n][k]);
    }
  }
  return d;
}

SeriesCoefficients path_series_coefficients(double x, int count) {
  if (!(x > 1.0) || count < 1) {
    throw Error(ErrorCode::InvalidParameter, "series needs x > 1 and count >= 1");
  }
  const long double c = std::sqrt(static_cast<long double>(x) - 1.0L);
  const long double theta0 = std::atan(1.0L / c);
  std::vector<long double> a(count, 0.0L);
  a[0] = std::tan(theta0);
  for (int j = 0; j + 1 < count; ++j) {
    long double conv = (j == 0) ? 1.0L : 0.0L;
    for (int i = 0; i <= j; ++i) {
      conv += a[i] * a[j - i];
    }
    a[j + 1] = conv / static_cast<long double>(j + 1);
  }
  SeriesCoefficients out{x, std::vector<double>(count)};
  long double scale = c;
  for (int j = 0; j < count; ++j) {
    out.coeffs[j] = static_cast<double>(scale * a[j]);
    scale *= c;
  }
  return out;
}

double evaluate_polynomial(const ForestDistribution& d, double x) {
  if (d.probs.empty()) {
    return 1.0;
  }
  double sum = 0.0;
  for (const auto& [k, p] : d.probs) {
    sum += p.get_d() * std::pow(x, k);
  }
  return sum;
}

BigInt matching_identity_lhs(int N) {
  if (N < 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "N must be nonnegative");
  }
  BigInt sum = 0;
  for (int K = 0; 2 * K <= N; ++K) {
    sum += pow2(N - 2 * K) * binomial(N, K) * binomial(N - K, N - 2 * K);
  }
  return sum;
}

Rational cycle_single_component(int n) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidSize, "C_n needs n >= 3");
  }
  return ratio(BigInt(n) * pow2(n - 2), factorial(n));
}

}  // namespace forest
