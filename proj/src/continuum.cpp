#include "ncrw/continuum.hpp"

#include <cmath>
#include <stdexcept>

#include "ncrw/lattice_walk.hpp"
#include "ncrw/quadrature.hpp"

namespace ncrw {

namespace {

constexpr std::complex<double> kImag(0.0, 1.0);

// Gaussian factors below exp(-69) ~ 1e-30 are dropped.
constexpr double kLogTailCut = 69.0;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double bm_density(double t, double x, double y) {
  if (!(t > 0.0)) throw std::domain_error("bm_density: time must be positive");
  const double d = y - x;
  return std::exp(-d * d / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
}

double hermite_martingale(int n, double t, double x) {
  if (n < 0) throw std::invalid_argument("hermite_martingale: degree must be >= 0");
  if (t < 0.0) throw std::domain_error("hermite_martingale: time must be >= 0");
  // sum_j (-1)^j n!/(j! (n-2j)!) x^(n-2j) (t/2)^j, valid down to t = 0.
  double acc = 0.0;
  for (int j = 0; 2 * j <= n; ++j) {
    const double coeff =
        factorial(n) / (factorial(j) * factorial(n - 2 * j)) * (j % 2 == 0 ? 1.0 : -1.0);
    acc += coeff * std::pow(x, n - 2 * j) * std::pow(0.5 * t, j);
  }
  return acc;
}

double dyson_martingale(const SiteConfiguration& config, int k, double t, double x) {
  const Polynomial<Rational> basis = lagrange_basis(config, k);
  double acc = 0.0;
  for (std::size_t n = 0; n <= basis.degree(); ++n) {
    const double c = to_double(basis.coeff(n));
    if (c == 0.0) continue;
    acc += c * hermite_martingale(static_cast<int>(n), t, x);
  }
  return acc;
}

double dyson_kernel(const SiteConfiguration& config, double s, double x, double t, double y) {
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("dyson_kernel: times must be positive");
  double acc = 0.0;
  for (int j = 0; j < config.size(); ++j) {
    acc += bm_density(s, config.site(j), x) * dyson_martingale(config, j, t, y);
  }
  if (s > t) acc -= bm_density(s - t, y, x);
  return acc;
}

double extended_sine_kernel(double rho, double dt, double dx) {
  if (!(rho > 0.0)) throw std::invalid_argument("extended_sine_kernel: density must be positive");
  if (dt == 0.0) {
    if (dx == 0.0) return rho;
    return std::sin(M_PI * rho * dx) / (M_PI * dx);
  }
  if (dt > 0.0) {
    return integrate(
        [&](double u) { return std::exp(0.5 * M_PI * M_PI * u * u * dt) * std::cos(M_PI * u * dx); },
        0.0, rho, 512);
  }
  // dt < 0: the Gaussian factor decays; truncate where it falls below 1e-30.
  const double u_max = std::sqrt(2.0 * kLogTailCut / (M_PI * M_PI * (-dt)));
  if (u_max <= rho) return 0.0;
  return -integrate_composite(
      [&](double u) { return std::exp(0.5 * M_PI * M_PI * u * u * dt) * std::cos(M_PI * u * dx); },
      rho, u_max, 8, 128);
}

std::complex<double> theta3(std::complex<double> v, std::complex<double> tau, int terms) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("theta3: Im(tau) must be positive");
  int cutoff = terms;
  if (cutoff <= 0) {
    // |e^{pi i tau j^2}| = e^{-pi Im(tau) j^2} < 1e-16, plus slack for the
    // e^{2 pi i v j} factor when v has an imaginary part.
    const double base = std::sqrt((16.0 * std::log(10.0) + 4.0 * M_PI * std::abs(v.imag()) + 4.0) /
                                  (M_PI * tau.imag()));
    cutoff = static_cast<int>(std::ceil(base)) + 2;
  }
  std::complex<double> acc(1.0, 0.0);
  for (int j = 1; j <= cutoff; ++j) {
    const std::complex<double> square = M_PI * kImag * tau * static_cast<double>(j * j);
    const std::complex<double> linear = 2.0 * M_PI * kImag * v * static_cast<double>(j);
    acc += std::exp(square + linear) + std::exp(square - linear);
  }
  return acc;
}

double theta3_reciprocity_gap(std::complex<double> v, std::complex<double> tau) {
  const std::complex<double> lhs = theta3(v, tau);
  const std::complex<double> rhs = theta3(v / tau, -1.0 / tau) *
                                   std::exp(-M_PI * kImag * v * v / tau) * std::sqrt(kImag / tau);
  return std::abs(lhs - rhs);
}

double dyson_kernel_equidistant(int a, double s, double x, double t, double y, int nodes) {
  if (a < 2) throw std::invalid_argument("dyson_kernel_equidistant: a must be >= 2");
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("dyson_kernel_equidistant: times must be positive");
  const double rho = 1.0 / (2.0 * a);
  const double dt = t - s;
  const double dx = y - x;

  const std::complex<double> tau(0.0, 2.0 * M_PI * rho * rho * s);
  const double correction =
      integrate(
          [&](double lam) {
            const std::complex<double> v(rho * x, -lam * rho * rho * s);
            const std::complex<double> factor =
                std::exp(std::complex<double>(0.5 * lam * lam * rho * rho * dt, lam * rho * dx));
            return (factor * (theta3(v, tau) - 1.0)).real();
          },
          -M_PI, M_PI, nodes) *
      rho / (2.0 * M_PI);
  return extended_sine_kernel(rho, dt, dx) + correction;
}

double dyson_kernel_equidistant_direct(int a, double s, double x, double t, double y, int nodes) {
  if (a < 2) throw std::invalid_argument("dyson_kernel_equidistant_direct: a must be >= 2");
  if (!(s > 0.0) || !(t > 0.0)) throw std::domain_error("dyson_kernel_equidistant_direct: times must be positive");
  const double spacing = 2.0 * a;
  const double reach = 8.0 * std::sqrt(s) + spacing;  // Gaussian mass beyond 8 sigma < 1e-15

  double acc = 0.0;
  const long long j_lo = static_cast<long long>(std::floor((x - reach) / spacing));
  const long long j_hi = static_cast<long long>(std::ceil((x + reach) / spacing));
  for (long long j = j_lo; j <= j_hi; ++j) {
    const double w = y / spacing - static_cast<double>(j);
    // Martingale function of the equidistant Dyson system:
    // (1/2pi) int e^{lam^2 t / 8a^2} cos(lam w) dlam.
    const double m = integrate(
                         [&](double lam) {
                           return std::exp(lam * lam * t / (8.0 * a * a)) * std::cos(lam * w);
                         },
                         0.0, M_PI, nodes) /
                     M_PI;
    acc += bm_density(s, spacing * static_cast<double>(j), x) * m;
  }
  if (s > t) acc -= bm_density(s - t, y, x);
  return acc;
}

double local_clt_gap(int n, double t, double x, double y) {
  const double n2t = n * n * t;
  const double nx = n * x;
  const double ny = n * y;
  const auto ti = static_cast<long long>(std::llround(n2t));
  const auto xi = static_cast<long long>(std::llround(nx));
  const auto yi = static_cast<long long>(std::llround(ny));
  if (std::abs(n2t - ti) > 1e-9 || std::abs(nx - xi) > 1e-9 || std::abs(ny - yi) > 1e-9) {
    throw std::domain_error("local_clt_gap: n^2 t, n x, n y must be integers");
  }
  if ((ti + yi - xi) % 2 != 0) throw std::domain_error("local_clt_gap: unsupported parity");
  const double discrete = 0.5 * n * to_double(transition_prob(ti, xi, yi));
  return std::abs(discrete - bm_density(t, x, y));
}

double martingale_scaling_gap(const SiteConfiguration& config, int n, double t, double x) {
  if (n < 1 || n % 2 != 0) {
    throw std::invalid_argument("martingale_scaling_gap: n must be a positive even integer");
  }
  const double n2t = n * n * t;
  const double nx = n * x;
  const auto ti = static_cast<long long>(std::llround(n2t));
  const auto xi = static_cast<long long>(std::llround(nx));
  if (std::abs(n2t - ti) > 1e-9 || std::abs(nx - xi) > 1e-9) {
    throw std::domain_error("martingale_scaling_gap: n^2 t and n x must be integers");
  }
  std::vector<long long> dilated(config.sites());
  for (auto& site : dilated) site *= n;
  const SiteConfiguration scaled(dilated);

  double worst = 0.0;
  for (int k = 0; k < config.size(); ++k) {
    const double discrete = to_double(martingale_poly(scaled, k, ti).evaluate(Rational(xi)));
    const double continuum = dyson_martingale(config, k, t, x);
    worst = std::max(worst, std::abs(discrete - continuum));
  }
  return worst;
}

ScalingGaps convergence_gap(const SiteConfiguration& config, int n, double t, double x, double y) {
  ScalingGaps gaps;
  gaps.local_clt = local_clt_gap(n, t, x, y);
  gaps.martingale = martingale_scaling_gap(config, n, t, x);
  return gaps;
}

}  // namespace ncrw
