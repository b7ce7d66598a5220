#pragma once

#include <complex>

namespace ncrw {

// Equidistant infinite configuration with spacing 2a on the even sublattice.
// a = 1 is excluded: that walk is frozen into the alternating lattice and the
// martingale integrals below need a >= 2.
class EquidistantConfig {
 public:
  explicit EquidistantConfig(int a);

  int a() const { return a_; }
  long long spacing() const { return 2LL * a_; }
  double density() const { return 1.0 / (2.0 * a_); }

 private:
  int a_;
};

// Interpolation basis of the equidistant configuration:
// sin(pi(z/2a - k)) / (pi(z/2a - k)), value 1 at z = 2ak.
std::complex<double> sinc_basis(const EquidistantConfig& config, long long k,
                                std::complex<double> z);

// Truncated-product form of the same basis over sites |j| <= cutoff, for
// convergence checks against the closed sine form.
std::complex<double> sinc_basis_truncated(const EquidistantConfig& config, long long k,
                                          std::complex<double> z, long long cutoff);

// Martingale function anchored at site index k:
// (1/2pi) int_{-pi}^{pi} e^{i lam (y/2a - k)} / cos(lam/2a)^t dlam.
// Bounded by 2^(t/2) for a >= 2.
double martingale_value(const EquidistantConfig& config, long long k, long long t, long long y,
                        int nodes = 512);

enum class InfiniteKernelRoute {
  automatic,  // direct for small times, spectral otherwise
  direct,     // finite j-sum of p * M terms (cancellation grows like 2^(t/2))
  spectral,   // exactly equivalent folded single integral, stable at all times
};

// Space-time correlation kernel of the infinite system.
double kernel_value(const EquidistantConfig& config, long long s, long long x, long long t,
                    long long y, InfiniteKernelRoute route = InfiniteKernelRoute::automatic,
                    int nodes = 512);

// Equilibrium kernel at density rho = 1/2a as a function of (dt, dx) =
// (t - s, y - x); zero on odd parity dt + dx.
double sine_kernel_discrete(double rho, long long dt, long long dx, int nodes = 512);

// |kernel at times shifted by n  -  equilibrium kernel|; decays to 0 in n.
double relaxation_gap(const EquidistantConfig& config, long long s, long long t, long long x,
                      long long y, long long n);

}  // namespace ncrw
