#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "ncrw/finite_kernel.hpp"
#include "ncrw/mc_engine.hpp"

using ncrw::estimate_correlation;
using ncrw::PathEnumerator;
using ncrw::PathWeight;
using ncrw::Rational;
using ncrw::sample_weighted;
using ncrw::SiteConfiguration;
using ncrw::TimeSlice;

TEST_CASE("single-step weights for two walkers") {
  const SiteConfiguration config({0, 2});
  const auto ensemble = sample_weighted(config, 1, 40000, 11);

  std::map<Rational, int> counts;
  for (const auto& sample : ensemble.samples) ++counts[sample.weight];
  REQUIRE(counts.size() == 3);  // weights 0, 1, 2 only
  const double n = double(ensemble.samples.size());
  CHECK(std::abs(counts[Rational(0)] / n - 0.25) < 0.01);
  CHECK(std::abs(counts[Rational(1)] / n - 0.50) < 0.01);
  CHECK(std::abs(counts[Rational(2)] / n - 0.25) < 0.01);
}

TEST_CASE("a single walker never collides") {
  const SiteConfiguration config({0});
  const auto ensemble = sample_weighted(config, 5, 500, 3);
  for (const auto& sample : ensemble.samples) CHECK(sample.weight == Rational(1));
}

TEST_CASE("weight mean is a consistent estimator of one") {
  for (const auto& sites : {std::vector<long long>{0, 2}, std::vector<long long>{0, 2, 4}}) {
    const SiteConfiguration config(sites);
    const auto ensemble = sample_weighted(config, 6, 100000, 2024);
    double sum = 0.0, sq = 0.0;
    for (const auto& sample : ensemble.samples) {
      const double w = ncrw::to_double(sample.weight);
      sum += w;
      sq += w * w;
    }
    const double n = double(ensemble.samples.size());
    const double mean = sum / n;
    const double se = std::sqrt((sq / n - mean * mean) / (n - 1.0));
    CHECK(std::abs(mean - 1.0) < 3.0 * se);
  }
}

TEST_CASE("weight mean covers 1 for almost every seed") {
  // nominal 3-sigma coverage is ~99.7%; demand at least 97 of 100 seeds
  const SiteConfiguration config({0, 2});
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto ensemble = sample_weighted(config, 4, 2000, seed);
    double sum = 0.0, sq = 0.0;
    for (const auto& sample : ensemble.samples) {
      const double w = ncrw::to_double(sample.weight);
      sum += w;
      sq += w * w;
    }
    const double n = double(ensemble.samples.size());
    const double mean = sum / n;
    const double se = std::sqrt((sq / n - mean * mean) / (n - 1.0));
    if (std::abs(mean - 1.0) < 3.0 * se) ++covered;
  }
  CHECK(covered >= 97);
}

TEST_CASE("weighted estimator agrees with the kernel determinant") {
  const SiteConfiguration config({0, 2});
  const auto ensemble = sample_weighted(config, 2, 50000, 7);
  const std::vector<TimeSlice> slices{{1, {1}}};
  const auto est = estimate_correlation(ensemble, slices);
  CHECK(std::abs(est.value - 0.5) < 3.0 * est.std_error);

  // parity-violating request is identically zero
  const std::vector<TimeSlice> bad{{1, {0}}};
  const auto zero = estimate_correlation(ensemble, bad);
  CHECK(zero.value == 0.0);

  const SiteConfiguration three({0, 2, 4});
  const auto wide = sample_weighted(three, 2, 50000, 8);
  const std::vector<TimeSlice> pair{{2, {0, 4}}};
  const double exact = ncrw::to_double(ncrw::correlation_exact(three, pair));
  const auto est2 = estimate_correlation(wide, pair);
  CHECK(std::abs(est2.value - exact) < 3.0 * est2.std_error);
}

TEST_CASE("sampling is reproducible and stream-stable") {
  const SiteConfiguration config({0, 2, 4});
  const auto a = sample_weighted(config, 3, 500, 99, 1);
  const auto b = sample_weighted(config, 3, 500, 99, 1);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].paths == b.samples[i].paths);
    CHECK(a.samples[i].weight == b.samples[i].weight);
  }
  // a different seed changes the draw
  const auto c = sample_weighted(config, 3, 500, 100, 1);
  bool any_different = false;
  for (std::size_t i = 0; i < a.samples.size() && !any_different; ++i) {
    any_different = a.samples[i].paths != c.samples[i].paths;
  }
  CHECK(any_different);
}

TEST_CASE("exact weighted expectations") {
  const PathEnumerator enumerator(24);

  SUBCASE("normalization") {
    for (const auto& sites : {std::vector<long long>{0, 2}, std::vector<long long>{0, 2, 4}}) {
      const SiteConfiguration config(sites);
      for (int horizon : {1, 2, 3}) {
        CHECK(ncrw::exact_conditional_expectation(
                  config, horizon, [](const auto&) { return Rational(1); }, enumerator) ==
              Rational(1));
      }
    }
  }

  SUBCASE("hand-enumerated occupation value") {
    const SiteConfiguration config({0, 2});
    const Rational value = ncrw::exact_conditional_expectation(
        config, 1,
        [](const std::vector<std::vector<long long>>& paths) {
          for (const auto& path : paths) {
            if (path[1] == 1) return Rational(1);
          }
          return Rational(0);
        },
        enumerator);
    CHECK(value == Rational(1, 2));
  }

  SUBCASE("killed complement of a symmetric statistic cancels exactly") {
    for (const auto& sites : {std::vector<long long>{0, 2}, std::vector<long long>{0, 4},
                              std::vector<long long>{0, 2, 4}}) {
      const SiteConfiguration config(sites);
      const int horizon = config.size() == 3 ? 4 : 4;
      // symmetric in the walkers: depends on the sorted endpoint multiset
      const ncrw::PathFunctional spread = [&](const std::vector<std::vector<long long>>& paths) {
        long long lo = paths[0].back(), hi = paths[0].back();
        for (const auto& path : paths) {
          lo = std::min(lo, path.back());
          hi = std::max(hi, path.back());
        }
        return Rational(hi - lo) + Rational(1, 3);
      };
      CHECK(ncrw::exact_weighted_expectation(config, horizon, spread,
                                             PathWeight::killed_complement, enumerator) ==
            Rational(0));
    }
  }

  SUBCASE("free walk mode is plain averaging") {
    const SiteConfiguration config({0, 2});
    const Rational mean_endpoint_spread = ncrw::exact_weighted_expectation(
        config, 1,
        [](const std::vector<std::vector<long long>>& paths) {
          return Rational(paths[1][1] - paths[0][1]);
        },
        PathWeight::free_walk, enumerator);
    CHECK(mean_endpoint_spread == Rational(2));
  }
}

TEST_CASE("ensemble dump is valid JSON lines") {
  const SiteConfiguration config({0, 2});
  const auto ensemble = sample_weighted(config, 2, 5, 1);
  std::ostringstream out;
  ncrw::dump_jsonl(ensemble, out);

  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto parsed = nlohmann::json::parse(line);
    REQUIRE(parsed.contains("paths"));
    REQUIRE(parsed.contains("weight_num"));
    REQUIRE(parsed.contains("weight_den"));
    CHECK(parsed["paths"].size() == 2);
    CHECK(parsed["paths"][0].size() == 3);
    ++lines;
  }
  CHECK(lines == 5);
}
