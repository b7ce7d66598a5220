#include "ncrw/finite_kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ncrw/exact_linalg.hpp"
#include "ncrw/lattice_walk.hpp"

namespace ncrw {

namespace {

// Assembles kernel entries with the anchored martingale families cached per time.
class KernelBuilder {
 public:
  explicit KernelBuilder(const SiteConfiguration& config) : config_(config) {}

  Rational value(long long s, long long x, long long t, long long y) {
    if (s < 0 || t < 0) throw std::invalid_argument("kernel: times must be >= 0");
    if (!site_supported(s, x) || !site_supported(t, y)) return Rational(0);
    const auto& family = family_at(t);
    Rational acc(0);
    for (int j = 0; j < config_.size(); ++j) {
      const Rational p = transition_prob(s, config_.site(j), x);
      if (p == 0) continue;
      acc += p * family[j].evaluate(Rational(y));
    }
    if (s > t) acc -= transition_prob(s - t, y, x);
    return acc;
  }

 private:
  const std::vector<Polynomial<Rational>>& family_at(long long t) {
    auto it = families_.find(t);
    if (it == families_.end()) it = families_.emplace(t, martingale_family(config_, t)).first;
    return it->second;
  }

  const SiteConfiguration& config_;
  std::map<long long, std::vector<Polynomial<Rational>>> families_;
};

std::vector<SpaceTimePoint> flatten_slices(std::span<const TimeSlice> slices) {
  std::vector<SpaceTimePoint> points;
  for (std::size_t m = 0; m < slices.size(); ++m) {
    if (m > 0 && slices[m].t <= slices[m - 1].t) {
      throw std::invalid_argument("correlation: slice times must be strictly increasing");
    }
    for (long long site : slices[m].sites) points.push_back({slices[m].t, site});
  }
  return points;
}

double float_determinant(const std::vector<std::vector<Rational>>& matrix) {
  const auto n = static_cast<Eigen::Index>(matrix.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = to_double(matrix[i][j]);
    }
  }
  return m.partialPivLu().determinant();
}

std::vector<std::vector<Rational>> correlation_matrix(const SiteConfiguration& config,
                                                      std::span<const TimeSlice> slices) {
  const auto points = flatten_slices(slices);
  KernelBuilder builder(config);
  std::vector<std::vector<Rational>> matrix(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      matrix[i][j] = builder.value(points[i].t, points[i].x, points[j].t, points[j].x);
    }
  }
  return matrix;
}

std::vector<std::vector<Rational>> fredholm_matrix(const SiteConfiguration& config,
                                                   std::span<const WeightedSupport> supports) {
  std::vector<SpaceTimePoint> points;
  std::vector<Rational> weights;
  for (std::size_t m = 0; m < supports.size(); ++m) {
    if (m > 0 && supports[m].t <= supports[m - 1].t) {
      throw std::invalid_argument("fredholm_gf: support times must be strictly increasing");
    }
    for (const auto& [site, w] : supports[m].chi) {
      points.push_back({supports[m].t, site});
      weights.push_back(w);
    }
  }
  KernelBuilder builder(config);
  const std::size_t n = points.size();
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      matrix[i][j] =
          builder.value(points[i].t, points[i].x, points[j].t, points[j].x) * weights[j];
      if (i == j) matrix[i][j] += 1;
    }
  }
  return matrix;
}

}  // namespace

Rational kernel_value_exact(const SiteConfiguration& config, long long s, long long x, long long t,
                            long long y) {
  return KernelBuilder(config).value(s, x, t, y);
}

double kernel_value(const SiteConfiguration& config, long long s, long long x, long long t,
                    long long y) {
  return to_double(kernel_value_exact(config, s, x, t, y));
}

Rational correlation_exact(const SiteConfiguration& config, std::span<const TimeSlice> slices) {
  return exact_determinant(correlation_matrix(config, slices));
}

double correlation(const SiteConfiguration& config, std::span<const TimeSlice> slices) {
  return float_determinant(correlation_matrix(config, slices));
}

Rational fredholm_gf_exact(const SiteConfiguration& config, std::span<const WeightedSupport> supports) {
  return exact_determinant(fredholm_matrix(config, supports));
}

double fredholm_gf(const SiteConfiguration& config, std::span<const WeightedSupport> supports) {
  return float_determinant(fredholm_matrix(config, supports));
}

TraceResult trace_at_time(const SiteConfiguration& config, long long t, long long lo, long long hi) {
  if (t < 0) throw std::invalid_argument("trace_at_time: time must be >= 0");
  TraceResult result;
  result.value = 0;
  result.window_complete =
      lo <= config.sites().front() - t && hi >= config.sites().back() + t;
  KernelBuilder builder(config);
  for (long long x = lo; x <= hi; ++x) {
    if (!site_supported(t, x)) continue;
    result.value += builder.value(t, x, t, x);
  }
  return result;
}

std::vector<std::vector<double>> equal_time_matrix(const SiteConfiguration& config, long long t,
                                                   long long lo, long long hi) {
  std::vector<long long> sites;
  for (long long x = lo; x <= hi; ++x) {
    if (site_supported(t, x)) sites.push_back(x);
  }
  KernelBuilder builder(config);
  std::vector<std::vector<double>> matrix(sites.size(), std::vector<double>(sites.size()));
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = 0; j < sites.size(); ++j) {
      matrix[i][j] = to_double(builder.value(t, sites[i], t, sites[j]));
    }
  }
  return matrix;
}

}  // namespace ncrw
