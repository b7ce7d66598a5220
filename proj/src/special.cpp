#include "ncrw/special.hpp"

#include <cmath>

namespace ncrw {

namespace {

constexpr double kLanczosG = 607.0 / 128.0;

constexpr double kLanczosCoeffs[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

}  // namespace

std::complex<double> lgamma_complex(std::complex<double> z) {
  if (z.real() < 0.5) {
    // Reflection formula; fine away from the poles on the non-positive axis.
    const std::complex<double> pi(M_PI, 0.0);
    return std::log(pi / std::sin(pi * z)) - lgamma_complex(1.0 - z);
  }
  const std::complex<double> w = z - 1.0;
  std::complex<double> series(kLanczosCoeffs[0], 0.0);
  for (int k = 1; k < 15; ++k) {
    series += kLanczosCoeffs[k] / (w + static_cast<double>(k));
  }
  const std::complex<double> t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (w + 0.5) * std::log(t) - t + std::log(series);
}

std::complex<double> sinc_pi(std::complex<double> w) {
  const std::complex<double> z = M_PI * w;
  if (std::abs(z) < 1e-6) {
    const std::complex<double> z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

}  // namespace ncrw
