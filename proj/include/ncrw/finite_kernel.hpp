#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ncrw/martingale.hpp"
#include "ncrw/rational.hpp"

namespace ncrw {

// Correlation kernel of the conditioned walk started at the configuration:
// sum_j p(s, x | u_j) M^(u_j)(t, y) minus the backward transition when s > t,
// and 0 whenever (s, x) or (t, y) sits on the wrong parity sublattice.
Rational kernel_value_exact(const SiteConfiguration& config, long long s, long long x, long long t,
                            long long y);
double kernel_value(const SiteConfiguration& config, long long s, long long x, long long t,
                    long long y);

// Points grouped per time; times must be strictly increasing.
struct TimeSlice {
  long long t = 0;
  std::vector<long long> sites;
};

// Spatio-temporal correlation function: determinant of the kernel matrix over
// all requested space-time points. Zero if any point violates parity.
Rational correlation_exact(const SiteConfiguration& config, std::span<const TimeSlice> slices);
double correlation(const SiteConfiguration& config, std::span<const TimeSlice> slices);

// Finitely supported per-time test function chi.
struct WeightedSupport {
  long long t = 0;
  std::vector<std::pair<long long, Rational>> chi;
};

// Fredholm generating function det(I + K chi) over the finite support; with
// chi = e^f - 1 this is the moment generating function of the occupation
// numbers weighted by f.
Rational fredholm_gf_exact(const SiteConfiguration& config, std::span<const WeightedSupport> supports);
double fredholm_gf(const SiteConfiguration& config, std::span<const WeightedSupport> supports);

struct TraceResult {
  Rational value;
  bool window_complete = true;  // false when sites reachable at time t fall outside the window
};

// Diagonal kernel sum over supported sites of [lo, hi]; equals the particle
// count when the window covers the reachable range.
TraceResult trace_at_time(const SiteConfiguration& config, long long t, long long lo, long long hi);

// Dense equal-time kernel matrix over the supported sites of [lo, hi],
// in float mode (diagnostics and spectrum checks).
std::vector<std::vector<double>> equal_time_matrix(const SiteConfiguration& config, long long t,
                                                   long long lo, long long hi);

}  // namespace ncrw
