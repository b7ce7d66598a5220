#include "ncrw/infinite_system.hpp"

#include <cmath>
#include <stdexcept>

#include "ncrw/lattice_walk.hpp"
#include "ncrw/quadrature.hpp"
#include "ncrw/rational.hpp"
#include "ncrw/special.hpp"

namespace ncrw {

namespace {

// Largest time at which the direct j-sum still cancels safely in doubles;
// the summand amplitudes grow like 2^(t/2) while the kernel itself is O(1).
constexpr long long kDirectRouteMaxTime = 64;

double kernel_direct(const EquidistantConfig& config, long long s, long long x, long long t,
                     long long y, int nodes) {
  const long long spacing = config.spacing();
  double acc = 0.0;
  // p(s, x | 2aj) vanishes outside |2aj - x| <= s, so the sum is exact.
  const long long j_lo = static_cast<long long>(std::ceil((x - s) / static_cast<double>(spacing)));
  const long long j_hi = static_cast<long long>(std::floor((x + s) / static_cast<double>(spacing)));
  for (long long j = j_lo; j <= j_hi; ++j) {
    const double p = to_double(transition_prob(s, spacing * j, x));
    if (p == 0.0) continue;
    acc += p * martingale_value(config, j, t, y, nodes);
  }
  return acc;
}

// Folding the lattice sum through its Fourier representation collapses it to
// one theta-integral per branch of lam*(theta) = 2a*theta mod 2pi:
//   sum_j p(s,x|2aj) M_j(t,y)
//     = (1/2pi) sum_m int_{I_m} Re[e^{i theta (y-x)} e^{-i pi m y / a}]
//                               cos(theta)^s cos(theta - pi m/a)^(-t) dtheta,
// where I_m = [(2m-1)pi/2a, (2m+1)pi/2a] intersected with [-pi, pi]. The
// integrand magnitude stays O(2^{|t-s|/2}) on every branch, so this form is
// usable at times where the direct sum has lost all precision.
double kernel_spectral(const EquidistantConfig& config, long long s, long long x, long long t,
                       long long y, int nodes) {
  const int a = config.a();
  const double piece = M_PI / (2.0 * a);
  double acc = 0.0;
  for (int m = -a; m <= a; ++m) {
    const double lo = std::max(-M_PI, (2 * m - 1) * piece);
    const double hi = std::min(M_PI, (2 * m + 1) * piece);
    if (hi <= lo) continue;
    const double center = M_PI * m / a;
    const double phase_m = -M_PI * m * static_cast<double>(y) / a;
    acc += integrate(
        [&](double theta) {
          const double ratio_pow = std::pow(std::cos(theta), static_cast<double>(s)) *
                                   std::pow(std::cos(theta - center), -static_cast<double>(t));
          return std::cos(theta * static_cast<double>(y - x) + phase_m) * ratio_pow;
        },
        lo, hi, nodes);
  }
  return acc / (2.0 * M_PI);
}

}  // namespace

EquidistantConfig::EquidistantConfig(int a) : a_(a) {
  if (a < 2) throw std::invalid_argument("EquidistantConfig: spacing parameter a must be >= 2");
}

std::complex<double> sinc_basis(const EquidistantConfig& config, long long k,
                                std::complex<double> z) {
  return sinc_pi(z / static_cast<double>(config.spacing()) - static_cast<double>(k));
}

std::complex<double> sinc_basis_truncated(const EquidistantConfig& config, long long k,
                                          std::complex<double> z, long long cutoff) {
  const double spacing = static_cast<double>(config.spacing());
  std::complex<double> prod(1.0, 0.0);
  for (long long j = -cutoff; j <= cutoff; ++j) {
    if (j == k) continue;
    prod *= (z - spacing * static_cast<double>(j)) / (spacing * static_cast<double>(k - j));
  }
  return prod;
}

double martingale_value(const EquidistantConfig& config, long long k, long long t, long long y,
                        int nodes) {
  if (t < 0) throw std::invalid_argument("martingale_value: time must be >= 0");
  const double w = static_cast<double>(y) / config.spacing() - static_cast<double>(k);
  const double inv_span = 1.0 / config.spacing();
  // Even integrand; the odd imaginary part integrates to zero.
  return integrate(
             [&](double lam) {
               return std::cos(lam * w) * std::pow(std::cos(lam * inv_span), -static_cast<double>(t));
             },
             0.0, M_PI, nodes) /
         M_PI;
}

double kernel_value(const EquidistantConfig& config, long long s, long long x, long long t,
                    long long y, InfiniteKernelRoute route, int nodes) {
  if (s < 0 || t < 0) throw std::invalid_argument("kernel_value: times must be >= 0");
  if (!site_supported(s, x) || !site_supported(t, y)) return 0.0;

  if (route == InfiniteKernelRoute::automatic) {
    route = (std::max(s, t) <= kDirectRouteMaxTime) ? InfiniteKernelRoute::direct
                                                    : InfiniteKernelRoute::spectral;
  }
  double acc = (route == InfiniteKernelRoute::direct) ? kernel_direct(config, s, x, t, y, nodes)
                                                      : kernel_spectral(config, s, x, t, y, nodes);
  if (s > t) acc -= to_double(transition_prob(s - t, y, x));
  return acc;
}

double sine_kernel_discrete(double rho, long long dt, long long dx, int nodes) {
  if (!(rho > 0.0 && rho <= 0.25)) {
    throw std::invalid_argument("sine_kernel_discrete: density must lie in (0, 1/4]");
  }
  if (((dt + dx) % 2 + 2) % 2 != 0) return 0.0;

  if (dt == 0) {
    if (dx == 0) return 2.0 * rho;
    return 2.0 * std::sin(M_PI * rho * static_cast<double>(dx)) / (M_PI * static_cast<double>(dx));
  }
  // Forward and backward branches share the integral over [0, rho]; the
  // backward one subtracts the free |dt|-step transition mass on top, which
  // keeps it consistent with the relaxed limit of the time-shifted kernel.
  const double forward = integrate(
      [&](double u) {
        return 2.0 * std::cos(M_PI * u * static_cast<double>(dx)) *
               std::pow(std::cos(M_PI * u), -static_cast<double>(dt));
      },
      0.0, rho, nodes);
  if (dt > 0) return forward;
  return forward - to_double(transition_prob(-dt, 0, dx));
}

double relaxation_gap(const EquidistantConfig& config, long long s, long long t, long long x,
                      long long y, long long n) {
  const double shifted = kernel_value(config, s + n, x, t + n, y);
  const double equilibrium = sine_kernel_discrete(config.density(), t - s, y - x);
  return std::abs(shifted - equilibrium);
}

}  // namespace ncrw
