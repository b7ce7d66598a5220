#include "ncrw/lattice_walk.hpp"

#include <cmath>

#include "ncrw/quadrature.hpp"

namespace ncrw {

Rational transition_prob(long long dt, long long x, long long y) {
  if (dt < 0) throw std::invalid_argument("transition_prob: negative elapsed time");
  const long long d = y - x;
  if (d < -dt || d > dt || ((dt + d) % 2) != 0) return Rational(0);
  const BigInt num = binomial(dt, (dt + d) / 2);
  return Rational(num, BigInt(1) << static_cast<unsigned>(dt));
}

double transition_prob_integral(long long dt, long long x, long long y, int nodes) {
  const double d = static_cast<double>(y - x);
  return integrate(
      [&](double u) { return std::cos(u * M_PI * d) * std::pow(std::cos(u * M_PI), static_cast<double>(dt)); },
      0.0, 1.0, nodes);
}

void PathEnumerator::for_each(
    std::span<const long long> start, int horizon,
    const std::function<void(const std::vector<std::vector<long long>>&, const Rational&)>& callback)
    const {
  const int n = static_cast<int>(start.size());
  const long long total = static_cast<long long>(n) * horizon;
  if (total > max_increments_) throw EnumerationCapError(total, max_increments_);

  std::vector<std::vector<long long>> paths(n, std::vector<long long>(horizon + 1));
  for (int j = 0; j < n; ++j) paths[j][0] = start[j];

  const Rational prob(BigInt(1), BigInt(1) << static_cast<unsigned>(total));
  const std::uint64_t assignments = std::uint64_t{1} << total;
  for (std::uint64_t bits = 0; bits < assignments; ++bits) {
    int b = 0;
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < horizon; ++t, ++b) {
        paths[j][t + 1] = paths[j][t] + (((bits >> b) & 1u) ? 1 : -1);
      }
    }
    callback(paths, prob);
  }
}

}  // namespace ncrw
