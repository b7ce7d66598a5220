#pragma once

#include <complex>

#include "ncrw/martingale.hpp"

namespace ncrw {

// Heat kernel (1/sqrt(2 pi t)) exp(-(y-x)^2 / 2t); throws for t <= 0.
double bm_density(double t, double x, double y);

// Polynomial martingale of Brownian motion: (t/2)^(n/2) H_n(x / sqrt(2t)),
// reducing to x^n at t = 0.
double hermite_martingale(int n, double t, double x);

// Continuum martingale function anchored at configuration site k: the
// interpolation polynomial with monomials replaced by Hermite martingales.
double dyson_martingale(const SiteConfiguration& config, int k, double t, double x);

// Dyson-model correlation kernel for a finite starting configuration.
double dyson_kernel(const SiteConfiguration& config, double s, double x, double t, double y);

// Extended sine kernel with density rho; branches on the sign of dt = t - s.
double extended_sine_kernel(double rho, double dt, double dx);

// theta3(v, tau) = sum_j exp(2 pi i v j + pi i tau j^2), Im tau > 0.
// terms = 0 picks the cutoff from the Gaussian tail bound (< 1e-16).
std::complex<double> theta3(std::complex<double> v, std::complex<double> tau, int terms = 0);

// |theta3(v, tau) - theta3(v/tau, -1/tau) e^{-pi i v^2 / tau} sqrt(i/tau)|
double theta3_reciprocity_gap(std::complex<double> v, std::complex<double> tau);

// Dyson kernel for the equidistant infinite configuration: extended sine
// kernel plus the finite-time theta correction integral.
double dyson_kernel_equidistant(int a, double s, double x, double t, double y, int nodes = 512);

// Same kernel by direct lattice summation with Gaussian tail truncation;
// independent route used to validate the theta form.
double dyson_kernel_equidistant_direct(int a, double s, double x, double t, double y,
                                       int nodes = 512);

// Diffusive-scaling diagnostics. Discrete supported sites carry spacing 2/n
// after scaling, so mass p corresponds to density (n/2) p per unit length;
// the local CLT gap compares (n/2) p(n^2 t, ny | nx) against the heat kernel.
double local_clt_gap(int n, double t, double x, double y);

// |M at the dilated configuration and scaled arguments - continuum M|,
// maximized over the anchor index.
double martingale_scaling_gap(const SiteConfiguration& config, int n, double t, double x);

struct ScalingGaps {
  double local_clt = 0.0;
  double martingale = 0.0;
};

// Both diffusive-scaling gaps at once; n must be even so the dilated
// configuration stays on the even sublattice.
ScalingGaps convergence_gap(const SiteConfiguration& config, int n, double t, double x, double y);

}  // namespace ncrw
