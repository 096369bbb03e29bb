#include "forest/rational.hpp"

#include "forest/error.hpp"

namespace forest {

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(s, 10);
    } else {
      num = BigInt(s.substr(0, slash), 10);
      den = BigInt(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::MalformedInput, "not a rational: \"" + s + "\"");
  }
  if (den == 0) {
    throw Error(ErrorCode::MalformedInput, "zero denominator in \"" + s + "\"");
  }
  return make_rational(num, den);
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) {
    return 0;
  }
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace forest
