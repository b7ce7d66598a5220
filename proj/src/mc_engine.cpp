#include "ncrw/mc_engine.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace ncrw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

bool strictly_ordered(const std::vector<long long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) return false;
  }
  return true;
}

BigInt vandermonde_of(const std::vector<long long>& v) {
  BigInt h = 1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = j + 1; k < v.size(); ++k) h *= BigInt(v[k] - v[j]);
  }
  return h;
}

void sample_stream(const std::vector<long long>& start, int horizon, const BigInt& h_start,
                   std::uint64_t seed, std::uint64_t stream_id, std::size_t count,
                   WeightedSample* out) {
  const int n = static_cast<int>(start.size());
  std::mt19937_64 engine(splitmix64(seed ^ splitmix64(stream_id)));
  for (std::size_t s = 0; s < count; ++s) {
    WeightedSample& sample = out[s];
    sample.paths.assign(n, std::vector<long long>(horizon + 1));
    for (int j = 0; j < n; ++j) sample.paths[j][0] = start[j];

    bool alive = true;
    std::vector<long long> current = start;
    for (int t = 1; t <= horizon; ++t) {
      for (int j = 0; j < n; ++j) {
        current[j] += (engine() & 1u) ? 1 : -1;
        sample.paths[j][t] = current[j];
      }
      if (alive && !strictly_ordered(current)) alive = false;
    }
    sample.weight = alive ? Rational(vandermonde_of(current), h_start) : Rational(0);
  }
}

}  // namespace

WeightedEnsemble sample_weighted(const SiteConfiguration& config, int horizon,
                                 std::size_t n_samples, std::uint64_t seed, int streams) {
  if (horizon < 0) throw std::invalid_argument("sample_weighted: horizon must be >= 0");
  if (streams < 1) throw std::invalid_argument("sample_weighted: need at least one stream");

  WeightedEnsemble ensemble;
  ensemble.start = config.sites();
  ensemble.horizon = horizon;
  ensemble.seed = seed;
  ensemble.streams = streams;
  ensemble.samples.resize(n_samples);

  const BigInt h_start = config.vandermonde();
  // Samples are assigned to streams in fixed contiguous blocks, so the result
  // does not depend on how many blocks run concurrently.
  const std::size_t per_stream = (n_samples + streams - 1) / streams;
  std::vector<std::thread> workers;
  for (int r = 0; r < streams; ++r) {
    const std::size_t begin = std::min(n_samples, r * per_stream);
    const std::size_t end = std::min(n_samples, begin + per_stream);
    if (begin == end) continue;
    workers.emplace_back(sample_stream, std::cref(ensemble.start), horizon, std::cref(h_start),
                         seed, static_cast<std::uint64_t>(r), end - begin,
                         ensemble.samples.data() + begin);
  }
  for (auto& w : workers) w.join();
  return ensemble;
}

Estimate estimate_correlation(const WeightedEnsemble& ensemble, std::span<const TimeSlice> slices) {
  for (const auto& slice : slices) {
    if (slice.t < 0 || slice.t > ensemble.horizon) {
      throw std::invalid_argument("estimate_correlation: slice time outside the sampled horizon");
    }
  }
  const std::size_t n = ensemble.samples.size();
  if (n == 0) throw std::invalid_argument("estimate_correlation: empty ensemble");

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& sample : ensemble.samples) {
    double value = 0.0;
    if (sample.weight != 0) {
      bool all_occupied = true;
      for (const auto& slice : slices) {
        for (long long site : slice.sites) {
          bool found = false;
          for (const auto& path : sample.paths) {
            if (path[slice.t] == site) {
              found = true;
              break;
            }
          }
          if (!found) {
            all_occupied = false;
            break;
          }
        }
        if (!all_occupied) break;
      }
      if (all_occupied) value = to_double(sample.weight);
    }
    sum += value;
    sum_sq += value * value;
  }
  Estimate est;
  est.value = sum / static_cast<double>(n);
  const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n > 1 ? (n - 1.0) : 1.0));
  est.std_error = std::sqrt(var / static_cast<double>(n));
  return est;
}

Rational exact_weighted_expectation(const SiteConfiguration& config, int horizon,
                                    const PathFunctional& statistic, PathWeight mode,
                                    const PathEnumerator& enumerator) {
  const int n = config.size();
  const BigInt h_start = config.vandermonde();
  Rational acc(0);
  enumerator.for_each(config.sites(), horizon, [&](const auto& paths, const Rational& prob) {
    bool alive = true;
    std::vector<long long> current(n);
    for (int t = 1; t <= horizon && alive; ++t) {
      for (int j = 0; j < n; ++j) current[j] = paths[j][t];
      if (!strictly_ordered(current)) alive = false;
    }
    Rational weight(0);
    switch (mode) {
      case PathWeight::htransform:
        if (!alive) return;
        for (int j = 0; j < n; ++j) current[j] = paths[j][horizon];
        weight = Rational(vandermonde_of(current), h_start);
        break;
      case PathWeight::killed_complement:
        if (alive) return;
        for (int j = 0; j < n; ++j) current[j] = paths[j][horizon];
        weight = Rational(vandermonde_of(current), h_start);
        break;
      case PathWeight::free_walk:
        weight = 1;
        break;
    }
    if (weight == 0) return;
    const Rational value = statistic(paths);
    if (value == 0) return;
    acc += prob * weight * value;
  });
  return acc;
}

Rational exact_conditional_expectation(const SiteConfiguration& config, int horizon,
                                       const PathFunctional& statistic,
                                       const PathEnumerator& enumerator) {
  return exact_weighted_expectation(config, horizon, statistic, PathWeight::htransform, enumerator);
}

void dump_jsonl(const WeightedEnsemble& ensemble, std::ostream& out) {
  for (const auto& sample : ensemble.samples) {
    nlohmann::json line;
    line["paths"] = sample.paths;
    line["weight_num"] = numerator(sample.weight).str();
    line["weight_den"] = denominator(sample.weight).str();
    out << line.dump() << '\n';
  }
}

}  // namespace ncrw
