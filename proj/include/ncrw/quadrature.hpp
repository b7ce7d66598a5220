#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ncrw {

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n; results are cached, thread-safe.
const QuadratureRule& gauss_legendre(int n);

template <class F>
double integrate(F&& f, double a, double b, int nodes) {
  const QuadratureRule& rule = gauss_legendre(nodes);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * acc;
}

template <class F>
double integrate_composite(F&& f, double a, double b, int panels, int nodes) {
  double acc = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    acc += integrate(f, a + p * h, a + (p + 1) * h, nodes);
  }
  return acc;
}

}  // namespace ncrw
