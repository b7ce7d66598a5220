#pragma once

#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "ncrw/poly.hpp"
#include "ncrw/rational.hpp"

namespace ncrw {

// Monic martingale polynomial of the simple symmetric walk at fixed time,
// read off the exact Taylor expansion of exp(a*x) / cosh(a)^t.
Polynomial<Rational> walk_polynomial(int degree, long long time);

// m_0 .. m_max at a common time, sharing one series expansion.
std::vector<Polynomial<Rational>> walk_polynomial_family(int max_degree, long long time);

// Coefficient-level identity m_n(t, x) = (m_n(t+1, x+1) + m_n(t+1, x-1)) / 2.
bool walk_polynomial_recurrence_holds(int degree, long long time);

// Monic Euler polynomial E_n^(lambda) from (2/(1+e^a))^lambda * exp(a*x).
Polynomial<Rational> euler_polynomial(int degree, long long lambda);

template <class T>
struct ItoDecomposition {
  std::vector<T> martingale_term;
  std::vector<T> laplacian_term;
  std::vector<T> time_term;
};

// Per-step split of f(t+1, S(t+1)) - f(t, S(t)) into the increment-driven
// part, the half discrete Laplacian at t+1, and the pure time difference.
// The three sequences telescope to f(T, S(T)) - f(0, S(0)).
template <class F>
auto ito_decompose(F&& f, long long t_max, std::span<const long long> path)
    -> ItoDecomposition<std::decay_t<decltype(f(0LL, 0LL))>> {
  using T = std::decay_t<decltype(f(0LL, 0LL))>;
  if (path.empty()) throw std::domain_error("ito_decompose: empty path");
  const long long steps = static_cast<long long>(path.size()) - 1;
  if (steps > t_max) throw std::domain_error("ito_decompose: path leaves the tabulated time range");

  ItoDecomposition<T> out;
  out.martingale_term.reserve(steps);
  out.laplacian_term.reserve(steps);
  out.time_term.reserve(steps);
  for (long long i = 0; i < steps; ++i) {
    const long long x = path[i];
    const long long inc = path[i + 1] - x;
    if (inc != 1 && inc != -1) throw std::domain_error("ito_decompose: increments must be +-1");
    const T up = f(i + 1, x + 1);
    const T dn = f(i + 1, x - 1);
    const T mid = f(i + 1, x);
    const T here = f(i, x);
    out.martingale_term.push_back((up - dn) / T(2) * T(inc));
    out.laplacian_term.push_back((up - T(2) * mid + dn) / T(2));
    out.time_term.push_back(mid - here);
  }
  return out;
}

}  // namespace ncrw
