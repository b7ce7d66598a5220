#include "ncrw/secant.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ncrw/quadrature.hpp"
#include "ncrw/special.hpp"

namespace ncrw {

namespace {

// Tail of the t-step density decays like e^(-pi|x|/2); beyond |x| = 40 the
// mass is below 1e-27 for every t used here.
constexpr double kIntegrationCut = 40.0;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

double secant_density(double x) { return 0.5 / std::cosh(0.5 * M_PI * x); }

double secant_cdf(double x) { return M_2_PI * std::atan(std::exp(0.5 * M_PI * x)); }

double secant_cdf_inverse(double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("secant_cdf_inverse: q must lie in (0, 1)");
  return M_2_PI * std::log(std::tan(0.5 * M_PI * q));
}

double gh_secant_density(int t, double x) {
  if (t < 1) throw std::invalid_argument("gh_secant_density: t must be >= 1");
  const std::complex<double> z(0.5 * t, 0.5 * x);
  const double log_abs_gamma_sq = 2.0 * lgamma_complex(z).real();
  return std::exp((t - 2) * std::log(2.0) - std::log(M_PI) - std::lgamma(static_cast<double>(t)) +
                  log_abs_gamma_sq);
}

std::pair<double, double> characteristic_pair(int t, double alpha, int nodes, int panels) {
  const double quad = integrate_composite(
      [&](double x) { return std::cos(alpha * x) * gh_secant_density(t, x); }, -kIntegrationCut,
      kIntegrationCut, panels, nodes);
  const double closed = std::pow(std::cosh(alpha), -static_cast<double>(t));
  return {quad, closed};
}

std::pair<double, double> laplace_pair(int t, double lambda, int nodes, int panels) {
  if (!(std::abs(lambda) < M_PI_2)) throw std::domain_error("laplace_pair: |lambda| must be < pi/2");
  // The tilted integrand only decays like e^(-(pi/2 - |lambda|)|x|), so the
  // cut has to widen as lambda approaches the boundary of the strip.
  const double cut = std::max(kIntegrationCut, 38.0 / (M_PI_2 - std::abs(lambda)));
  const int spread_panels = std::max(panels, static_cast<int>(cut / 2.0));
  const double quad = integrate_composite(
      [&](double x) { return std::exp(-lambda * x) * gh_secant_density(t, x); }, -cut, cut,
      spread_panels, nodes);
  const double closed = std::pow(std::cos(lambda), -static_cast<double>(t));
  return {quad, closed};
}

SecantSampler::SecantSampler(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(splitmix64(seed ^ splitmix64(stream_id))) {}

double SecantSampler::next_uniform() {
  // 53-bit mantissa, centered to keep the value strictly inside (0, 1).
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double SecantSampler::next_increment() { return secant_cdf_inverse(next_uniform()); }

std::vector<double> sample_path(SecantSampler& sampler, int steps) {
  if (steps < 0) throw std::invalid_argument("sample_path: steps must be >= 0");
  std::vector<double> path(steps + 1, 0.0);
  for (int i = 1; i <= steps; ++i) path[i] = path[i - 1] + sampler.next_increment();
  return path;
}

}  // namespace ncrw
