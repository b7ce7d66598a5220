#include "ncrw/martingale.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncrw/exact_linalg.hpp"
#include "ncrw/walk_polynomials.hpp"

namespace ncrw {

SiteConfiguration::SiteConfiguration(std::vector<long long> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw std::invalid_argument("configuration must hold at least one site");
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i] % 2 != 0) throw std::invalid_argument("configuration sites must be even");
    if (i > 0 && sites_[i - 1] >= sites_[i]) {
      throw std::invalid_argument("configuration sites must be strictly increasing");
    }
  }
}

BigInt SiteConfiguration::vandermonde() const {
  BigInt h = 1;
  for (std::size_t j = 0; j < sites_.size(); ++j) {
    for (std::size_t k = j + 1; k < sites_.size(); ++k) {
      h *= BigInt(sites_[k] - sites_[j]);
    }
  }
  return h;
}

Polynomial<Rational> lagrange_basis(const SiteConfiguration& config, int k) {
  const auto& u = config.sites();
  if (k < 0 || k >= config.size()) throw std::out_of_range("lagrange_basis: site index out of range");
  Polynomial<Rational> p(std::vector<Rational>{Rational(1)});
  for (int j = 0; j < config.size(); ++j) {
    if (j == k) continue;
    const Rational denom(u[k] - u[j]);
    p = p * Polynomial<Rational>(std::vector<Rational>{Rational(-u[j]) / denom, Rational(1) / denom});
  }
  return p;
}

Polynomial<Rational> martingale_poly(const SiteConfiguration& config, int k, long long time) {
  const Polynomial<Rational> basis = lagrange_basis(config, k);
  const auto walk_polys = walk_polynomial_family(static_cast<int>(basis.degree()), time);
  Polynomial<Rational> m;
  for (std::size_t n = 0; n <= basis.degree(); ++n) {
    m = m + walk_polys[n] * basis.coeff(n);
  }
  return m;
}

std::vector<Polynomial<Rational>> martingale_family(const SiteConfiguration& config, long long time) {
  const auto walk_polys = walk_polynomial_family(config.size() - 1, time);
  std::vector<Polynomial<Rational>> family;
  family.reserve(config.size());
  for (int k = 0; k < config.size(); ++k) {
    const Polynomial<Rational> basis = lagrange_basis(config, k);
    Polynomial<Rational> m;
    for (std::size_t n = 0; n <= basis.degree(); ++n) {
      m = m + walk_polys[n] * basis.coeff(n);
    }
    family.push_back(std::move(m));
  }
  return family;
}

Rational det_martingale(const SiteConfiguration& config, long long time,
                        std::span<const long long> positions) {
  const int n = config.size();
  if (static_cast<int>(positions.size()) != n) {
    throw std::invalid_argument("det_martingale: need one position per configuration site");
  }
  const auto family = martingale_family(config, time);
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      matrix[j][k] = family[k].evaluate(Rational(positions[j]));
    }
  }
  return exact_determinant(std::move(matrix));
}

Rational vandermonde_ratio(std::span<const long long> u, std::span<const long long> x) {
  if (u.size() != x.size()) throw std::invalid_argument("vandermonde_ratio: size mismatch");
  BigInt num = 1, den = 1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = j + 1; k < u.size(); ++k) {
      num *= BigInt(x[k] - x[j]);
      den *= BigInt(u[k] - u[j]);
    }
  }
  if (den == 0) throw std::invalid_argument("vandermonde_ratio: degenerate reference configuration");
  return Rational(num, den);
}

namespace {

void increasing_subsets(int n, int size, std::vector<int>& scratch,
                        const std::function<void(const std::vector<int>&)>& visit, int from = 0) {
  if (static_cast<int>(scratch.size()) == size) {
    visit(scratch);
    return;
  }
  for (int i = from; i <= n - (size - static_cast<int>(scratch.size())); ++i) {
    scratch.push_back(i);
    increasing_subsets(n, size, scratch, visit, i + 1);
    scratch.pop_back();
  }
}

Rational minor_determinant(const std::vector<Polynomial<Rational>>& family,
                           const std::vector<int>& anchor_indices,
                           const std::vector<long long>& positions) {
  const int n = static_cast<int>(anchor_indices.size());
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      matrix[j][k] = family[anchor_indices[k]].evaluate(Rational(positions[j]));
    }
  }
  return exact_determinant(std::move(matrix));
}

}  // namespace

std::pair<Rational, Rational> reducibility_pair(const SiteConfiguration& config, int n_prime,
                                                int t, int horizon, const SymmetricFn& statistic,
                                                const PathEnumerator& enumerator) {
  const int n = config.size();
  if (n_prime < 1 || n_prime >= n) throw std::invalid_argument("reducibility_pair: need 1 <= N' < N");
  if (t < 0 || t > horizon) throw std::invalid_argument("reducibility_pair: need 0 <= t <= horizon");

  const auto family_T = martingale_family(config, horizon);
  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> scratch;
    increasing_subsets(n, n_prime, scratch, [&](const std::vector<int>& s) { subsets.push_back(s); });
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  Rational lhs(0);
  enumerator.for_each(config.sites(), horizon, [&](const auto& paths, const Rational& prob) {
    std::vector<long long> final_positions(n);
    for (int j = 0; j < n; ++j) final_positions[j] = paths[j][horizon];
    const Rational det = minor_determinant(family_T, all, final_positions);
    if (det == 0) return;
    for (const auto& subset : subsets) {
      std::vector<long long> observed(n_prime);
      for (int i = 0; i < n_prime; ++i) observed[i] = paths[subset[i]][t];
      std::sort(observed.begin(), observed.end());
      lhs += prob * statistic(observed) * det;
    }
  });

  Rational rhs(0);
  for (const auto& subset : subsets) {
    std::vector<long long> start(n_prime);
    for (int i = 0; i < n_prime; ++i) start[i] = config.site(subset[i]);
    enumerator.for_each(start, horizon, [&](const auto& paths, const Rational& prob) {
      std::vector<long long> observed(n_prime), final_positions(n_prime);
      for (int i = 0; i < n_prime; ++i) {
        observed[i] = paths[i][t];
        final_positions[i] = paths[i][horizon];
      }
      std::sort(observed.begin(), observed.end());
      rhs += prob * statistic(observed) * minor_determinant(family_T, subset, final_positions);
    });
  }

  return {lhs, rhs};
}

}  // namespace ncrw
