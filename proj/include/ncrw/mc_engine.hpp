#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "ncrw/finite_kernel.hpp"
#include "ncrw/lattice_walk.hpp"
#include "ncrw/martingale.hpp"
#include "ncrw/rational.hpp"

namespace ncrw {

struct WeightedSample {
  std::vector<std::vector<long long>> paths;  // paths[j][t], j < N, t <= horizon
  Rational weight;                            // 0 if the ordering broke by the horizon
};

struct WeightedEnsemble {
  std::vector<long long> start;
  int horizon = 0;
  std::uint64_t seed = 0;
  int streams = 1;
  std::vector<WeightedSample> samples;
};

// Free product-law paths reweighted by the Vandermonde ratio at the horizon,
// with weight 0 on paths whose ordering breaks. The sample mean of the
// weights estimates 1.
WeightedEnsemble sample_weighted(const SiteConfiguration& config, int horizon,
                                 std::size_t n_samples, std::uint64_t seed, int streams = 1);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Weighted empirical estimate of the correlation function at the requested
// space-time points (all requested sites occupied simultaneously).
Estimate estimate_correlation(const WeightedEnsemble& ensemble, std::span<const TimeSlice> slices);

enum class PathWeight {
  htransform,         // 1(ordering survives) * h(S(T))/h(u)
  killed_complement,  // 1(ordering broke)    * h(S(T))/h(u)
  free_walk,          // constant 1
};

using PathFunctional = std::function<Rational(const std::vector<std::vector<long long>>&)>;

// Exact expectation of F over every increment assignment under the chosen
// weight; the brute-force oracle behind the determinant cross-checks.
Rational exact_weighted_expectation(const SiteConfiguration& config, int horizon,
                                    const PathFunctional& statistic, PathWeight mode,
                                    const PathEnumerator& enumerator);

// Convenience form with the conditioned-law weight.
Rational exact_conditional_expectation(const SiteConfiguration& config, int horizon,
                                       const PathFunctional& statistic,
                                       const PathEnumerator& enumerator);

// One JSON object per sample: {"paths": [[..]..], "weight_num": "..", "weight_den": ".."}.
void dump_jsonl(const WeightedEnsemble& ensemble, std::ostream& out);

}  // namespace ncrw
