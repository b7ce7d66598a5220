#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ncrw {

// Density 1/(2 cosh(pi x / 2)); mean 0, variance 1.
double secant_density(double x);

// F(x) = (2/pi) atan(exp(pi x / 2))
double secant_cdf(double x);

// Inverse of secant_cdf; throws std::domain_error outside (0, 1).
double secant_cdf_inverse(double q);

// t-step density 2^(t-2) / (pi Gamma(t)) * |Gamma(t/2 + i x/2)|^2, t >= 1.
double gh_secant_density(int t, double x);

// (quadrature of int e^{i alpha x} density, closed form cosh(alpha)^-t).
std::pair<double, double> characteristic_pair(int t, double alpha, int nodes = 64, int panels = 20);

// Real-exponential version, valid for |lambda| < pi/2:
// (quadrature of int e^{-lambda x} density, closed form cos(lambda)^-t).
std::pair<double, double> laplace_pair(int t, double lambda, int nodes = 64, int panels = 20);

// Deterministic stream of secant-distributed increments. Identical
// (seed, stream_id) pairs reproduce identical paths bit for bit.
class SecantSampler {
 public:
  SecantSampler(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  double next_uniform();    // strictly inside (0, 1)
  double next_increment();  // secant-distributed via the inverse CDF

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// Partial-sum path S(0..steps) with S(0) = 0.
std::vector<double> sample_path(SecantSampler& sampler, int steps);

}  // namespace ncrw
