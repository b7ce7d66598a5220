#include "ncrw/rational.hpp"

#include <stdexcept>

namespace ncrw {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step: product of i consecutive integers
  }
  return result;
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(BigInt(s));
  }
  const BigInt num(s.substr(0, slash));
  const BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("fraction with zero denominator: " + s);
  return Rational(num, den);
}

}  // namespace ncrw
