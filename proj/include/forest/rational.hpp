#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace forest {

using BigInt = mpz_class;
/// Always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// "num/den", with the denominator printed even when it is 1.
std::string format_rational(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws Error{MalformedInput}.
Rational parse_rational(std::string_view text);

/// C(n, k); zero whenever n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);

/// n! for n >= 0; zero for negative n.
BigInt factorial(long n);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace forest
