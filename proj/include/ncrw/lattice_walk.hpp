#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncrw/rational.hpp"

namespace ncrw {

struct SpaceTimePoint {
  long long t = 0;  // time step, >= 0
  long long x = 0;  // lattice site

  // Walkers started on even sites live on Z_e at even times, Z_o at odd times.
  bool supported() const { return ((t + x) % 2) == 0; }
};

inline bool site_supported(long long t, long long x) { return ((t + x) % 2) == 0; }

// Exact dt-step probability of a simple symmetric walk moving from x to y:
// binom(dt, (dt+y-x)/2) / 2^dt inside the light cone, 0 outside.
Rational transition_prob(long long dt, long long x, long long y);

// Same quantity through its integral form
// int_0^1 cos(u*pi*(y-x)) * cos(u*pi)^dt du, for validating the Fourier route.
double transition_prob_integral(long long dt, long long x, long long y, int nodes = 256);

struct EnumerationCapError : std::runtime_error {
  EnumerationCapError(long long requested, long long cap)
      : std::runtime_error("path enumeration needs " + std::to_string(requested) +
                           " increments, cap is " + std::to_string(cap)),
        requested(requested),
        cap(cap) {}
  long long requested;
  long long cap;
};

// Exhaustive enumeration of N-walker increment assignments, the brute-force
// oracle behind the exact cross-checks. Visits every element of {-1,+1}^(N*T)
// with probability 2^(-N*T).
class PathEnumerator {
 public:
  explicit PathEnumerator(int max_increments = 24) : max_increments_(max_increments) {}

  int max_increments() const { return max_increments_; }

  // callback(paths, prob): paths[j][t] is walker j at time t, j < N, t <= horizon.
  void for_each(std::span<const long long> start, int horizon,
                const std::function<void(const std::vector<std::vector<long long>>&,
                                         const Rational&)>& callback) const;

 private:
  int max_increments_;
};

}  // namespace ncrw
