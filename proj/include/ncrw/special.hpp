#pragma once

#include <complex>

namespace ncrw {

// Principal branch of log Gamma via the Lanczos approximation
// (g = 607/128, 15 terms; relative error ~1e-13 on the right half plane).
std::complex<double> lgamma_complex(std::complex<double> z);

// sin(pi w)/(pi w) with the removable singularity at w = 0.
std::complex<double> sinc_pi(std::complex<double> w);

}  // namespace ncrw
