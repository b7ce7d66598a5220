#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ncrw/lattice_walk.hpp"
#include "ncrw/poly.hpp"
#include "ncrw/rational.hpp"

namespace ncrw {

// Finite initial configuration: strictly increasing even sites.
class SiteConfiguration {
 public:
  explicit SiteConfiguration(std::vector<long long> sites);

  int size() const { return static_cast<int>(sites_.size()); }
  const std::vector<long long>& sites() const { return sites_; }
  long long site(int k) const { return sites_[static_cast<std::size_t>(k)]; }

  // Vandermonde product over the configuration, always positive.
  BigInt vandermonde() const;

 private:
  std::vector<long long> sites_;
};

// Degree N-1 interpolation polynomial with value 1 at site k (0-based) and 0
// at the other sites of the configuration.
Polynomial<Rational> lagrange_basis(const SiteConfiguration& config, int k);

// Martingale polynomial anchored at site k: the interpolation polynomial with
// each monomial power replaced by the walk martingale polynomial of the
// same degree at time t.
Polynomial<Rational> martingale_poly(const SiteConfiguration& config, int k, long long time);

// All N anchored martingale polynomials at a common time.
std::vector<Polynomial<Rational>> martingale_family(const SiteConfiguration& config, long long time);

// det over (j, k) of the k-anchored martingale polynomial evaluated at
// positions[j]; equals the Vandermonde ratio h(positions)/h(config).
Rational det_martingale(const SiteConfiguration& config, long long time,
                        std::span<const long long> positions);

// h(x)/h(u) by the direct product formula; throws on repeated entries of u.
Rational vandermonde_ratio(std::span<const long long> u, std::span<const long long> x);

// Symmetric statistic of a sorted tuple of walker positions.
using SymmetricFn = std::function<Rational(const std::vector<long long>&)>;

// Both sides of the size-reduction identity for determinantal martingales:
// LHS weights a symmetric N'-point statistic at time t with the full N x N
// determinant at horizon T; RHS runs the N'-walker subsystems started at each
// increasing N'-subset of the configuration with the matching minor.
std::pair<Rational, Rational> reducibility_pair(const SiteConfiguration& config, int n_prime,
                                                int t, int horizon, const SymmetricFn& statistic,
                                                const PathEnumerator& enumerator);

}  // namespace ncrw
