#pragma once

#include <variant>
#include <vector>

#include "forest/distribution.hpp"
#include "forest/rational.hpp"

namespace forest {

/// p_{K_n}: P(K_n, k) = (n-1)! / ((n-2k)! k! (k-1)!) * 2^(n-2k) / C(2n-2, n).
/// Throws Error{InvalidSize} for n < 2.
ForestDistribution complete_distribution(int n);

/// p_{K_{s,t}}: P(K_{s,t}, k) = k (s+t) C(s,k) C(t,k) / (s t C(s+t, s)).
/// Throws Error{InvalidSize} unless s, t >= 1.
ForestDistribution bipartite_distribution(int s, int t);

/// Probability of finishing with exactly `l` more components on K_{s,t} when
/// `a` vertices of the s-side and `b` of the t-side are still untouched:
///
///   Q = C(b, l) C(s+t-b-1, a-l) / C(s+t-1, a),
///
/// and Q = 0 for l = -1. Throws Error{ParameterOutOfRange} unless
/// 0 <= a <= s, 0 <= b <= t and l >= -1.
Rational bipartite_Q(int s, int t, int a, int b, int l);

/// The symmetric closed form C(a, l) C(s+t-a-1, b-l) / C(s+t-1, b).
Rational bipartite_Q_alternate(int s, int t, int a, int b, int l);

struct CompleteFamily {
  int n;
};
struct CompleteBipartiteFamily {
  int s;
  int t;
};
using ClosedFamily = std::variant<CompleteFamily, CompleteBipartiteFamily>;

/// n(n-1)/(4n-6) for K_n, st/(s+t-1) for K_{s,t}. Throws Error{InvalidSize}.
Rational expected_components_closed(const ClosedFamily& family);

/// Exact E[kappa] over G(n, m) and a uniform ordering:
///   C(n,2)/(2n-3) * (1 - C(C(n,2)-m, 2n-3) / C(C(n,2), 2n-3)).
/// Throws Error{ParameterOutOfRange} unless n >= 2 and 1 <= m <= C(n,2).
Rational gnm_expected_components(int n, int m);

/// (mn + m) / (4m + n - 3), a lower bound for gnm_expected_components.
/// Throws Error{ParameterOutOfRange} unless n >= 2 and m >= 1.
Rational gnm_expectation_lower_bound(int n, int m);

/// f_n(x) = p_{P_{n+1}}(x) from n f_n = sum_{i<n} f_i f_{n-1-i}, f_0 = 1,
/// f_1 = x. Throws Error{InvalidSize} for n < 1.
ForestDistribution path_distribution(int n);

/// Relative tolerance used when comparing series coefficients against exact values.
inline constexpr double kSeriesRelativeTolerance = 1e-9;

struct SeriesCoefficients {
  double x = 0;
  /// coeffs[n] is the coefficient of t^n.
  std::vector<double> coeffs;
};

/// Taylor coefficients at t = 0 of
///   Q(t) = c tan(c t + arctan(1/c)),  c = sqrt(x - 1).
/// With T(u) = tan(theta0 + u), T' = 1 + T^2 gives
/// (j+1) a_{j+1} = [j == 0] + sum_i a_i a_{j-i}, a_0 = tan(theta0),
/// and Q's coefficients are c^(n+1) a_n. Computed in long double.
/// Throws Error{InvalidParameter} unless x > 1 and count >= 1.
SeriesCoefficients path_series_coefficients(double x, int count);

/// Evaluates the exact polynomial at a point (double precision).
double evaluate_polynomial(const ForestDistribution& d, double x);

/// sum_K 2^(N-2K) C(N,K) C(N-K, N-2K), which equals C(2N, N).
BigInt matching_identity_lhs(int N);

/// P(C_n, 1) = n 2^(n-2) / n!. Throws Error{InvalidSize} for n < 3.
Rational cycle_single_component(int n);

}  // namespace forest
