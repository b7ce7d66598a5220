#include "ncrw/walk_polynomials.hpp"

namespace ncrw {

namespace {

using Series = std::vector<Rational>;  // truncated power series in the expansion variable

Series series_mul(const Series& a, const Series& b, std::size_t order) {
  Series c(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

Series series_pow(Series base, unsigned long long exponent, std::size_t order) {
  Series result(order + 1, Rational(0));
  result[0] = 1;
  while (exponent > 0) {
    if (exponent & 1ull) result = series_mul(result, base, order);
    exponent >>= 1;
    if (exponent > 0) base = series_mul(base, base, order);
  }
  return result;
}

// 1/d for a series with d[0] = 1.
Series series_inverse(const Series& d, std::size_t order) {
  Series c(order + 1, Rational(0));
  c[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    Rational acc(0);
    for (std::size_t j = 1; j <= m && j < d.size(); ++j) acc += d[j] * c[m - j];
    c[m] = -acc;
  }
  return c;
}

Series cosh_series(std::size_t order) {
  Series s(order + 1, Rational(0));
  BigInt fact = 1;
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) fact *= static_cast<long long>(m);
    if (m % 2 == 0) s[m] = Rational(BigInt(1), fact);
  }
  return s;
}

// (1 + e^a)/2 = 1 + sum_{m>=1} a^m / (2 m!)
Series half_one_plus_exp_series(std::size_t order) {
  Series s(order + 1, Rational(0));
  s[0] = 1;
  BigInt fact = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    fact *= static_cast<long long>(m);
    s[m] = Rational(BigInt(1), 2 * fact);
  }
  return s;
}

// Monic polynomial of degree n whose x^k coefficient is (n!/k!) * c[n-k],
// the generic extraction from exp(a*x) * C(a) generating functions.
Polynomial<Rational> extract_polynomial(int n, const Series& c) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  BigInt falling = 1;  // n! / k!, built downward from k = n
  for (int k = n; k >= 0; --k) {
    coeffs[k] = Rational(falling) * c[n - k];
    if (k > 0) falling *= k;
  }
  return Polynomial<Rational>(std::move(coeffs));
}

}  // namespace

Polynomial<Rational> walk_polynomial(int degree, long long time) {
  if (degree < 0 || time < 0) throw std::invalid_argument("walk_polynomial: degree and time must be >= 0");
  const std::size_t order = static_cast<std::size_t>(degree);
  const Series inv =
      series_inverse(series_pow(cosh_series(order), static_cast<unsigned long long>(time), order), order);
  return extract_polynomial(degree, inv);
}

std::vector<Polynomial<Rational>> walk_polynomial_family(int max_degree, long long time) {
  if (max_degree < 0 || time < 0) throw std::invalid_argument("walk_polynomial_family: degree and time must be >= 0");
  const std::size_t order = static_cast<std::size_t>(max_degree);
  const Series inv =
      series_inverse(series_pow(cosh_series(order), static_cast<unsigned long long>(time), order), order);
  std::vector<Polynomial<Rational>> family;
  family.reserve(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) family.push_back(extract_polynomial(n, inv));
  return family;
}

bool walk_polynomial_recurrence_holds(int degree, long long time) {
  const Polynomial<Rational> now = walk_polynomial(degree, time);
  const Polynomial<Rational> next = walk_polynomial(degree, time + 1);
  const Polynomial<Rational> averaged =
      (next.shift_argument(Rational(1)) + next.shift_argument(Rational(-1))) * Rational(1, 2);
  return averaged == now;
}

Polynomial<Rational> euler_polynomial(int degree, long long lambda) {
  if (degree < 0 || lambda < 0) throw std::invalid_argument("euler_polynomial: degree and lambda must be >= 0");
  const std::size_t order = static_cast<std::size_t>(degree);
  const Series inv = series_inverse(
      series_pow(half_one_plus_exp_series(order), static_cast<unsigned long long>(lambda), order), order);
  return extract_polynomial(degree, inv);
}

}  // namespace ncrw
