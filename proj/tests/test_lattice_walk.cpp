#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ncrw/lattice_walk.hpp"

using ncrw::PathEnumerator;
using ncrw::Rational;
using ncrw::transition_prob;
using ncrw::transition_prob_integral;

TEST_CASE("transition probabilities at pinned values") {
  CHECK(transition_prob(0, 5, 5) == Rational(1));
  CHECK(transition_prob(2, 0, 0) == Rational(1, 2));
  CHECK(transition_prob(1, 0, 2) == Rational(0));
  CHECK(transition_prob(4, 0, 2) == Rational(1, 4));
  CHECK(transition_prob(3, 0, 0) == Rational(0));  // parity
}

TEST_CASE("rows sum to one") {
  for (long long dt : {0, 1, 2, 5, 9}) {
    Rational total(0);
    for (long long y = -dt; y <= dt; ++y) total += transition_prob(dt, 0, y);
    CHECK(total == Rational(1));
  }
}

TEST_CASE("Chapman-Kolmogorov composition is exact") {
  for (long long first : {1, 2, 3}) {
    for (long long second : {1, 2, 4}) {
      for (long long target = -(first + second); target <= first + second; ++target) {
        Rational composed(0);
        for (long long mid = -first; mid <= first; ++mid) {
          composed += transition_prob(first, 0, mid) * transition_prob(second, mid, target);
        }
        CHECK(composed == transition_prob(first + second, 0, target));
      }
    }
  }
}

TEST_CASE("symmetry and translation invariance") {
  for (long long dt : {1, 4, 7}) {
    for (long long d = -dt; d <= dt; ++d) {
      CHECK(transition_prob(dt, 0, d) == transition_prob(dt, d, 0));
      CHECK(transition_prob(dt, 3, 3 + d) == transition_prob(dt, 0, d));
    }
  }
}

TEST_CASE("integral representation matches the exact values") {
  CHECK(transition_prob_integral(2, 0, 0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(transition_prob_integral(1, 0, 2)) < 1e-10);
  for (long long dt = 0; dt <= 20; ++dt) {
    for (long long d = -20; d <= 20; ++d) {
      const double exact = ncrw::to_double(transition_prob(dt, 0, d));
      CHECK(std::abs(transition_prob_integral(dt, 0, d) - exact) < 1e-10);
    }
  }
}

TEST_CASE("path enumeration covers the sample space") {
  PathEnumerator enumerator(24);

  SUBCASE("single walker, single step") {
    std::vector<std::vector<long long>> seen;
    enumerator.for_each(std::vector<long long>{0}, 1, [&](const auto& paths, const Rational& p) {
      CHECK(p == Rational(1, 2));
      seen.push_back(paths[0]);
    });
    REQUIRE(seen.size() == 2);
    CHECK(seen[0] == std::vector<long long>{0, -1});
    CHECK(seen[1] == std::vector<long long>{0, 1});
  }

  SUBCASE("two walkers, probabilities normalize") {
    int count = 0;
    Rational total(0);
    enumerator.for_each(std::vector<long long>{0, 2}, 2, [&](const auto&, const Rational& p) {
      ++count;
      total += p;
    });
    CHECK(count == 16);
    CHECK(total == Rational(1));
  }

  SUBCASE("cap is enforced with a named limit") {
    PathEnumerator small(4);
    CHECK_THROWS_AS(small.for_each(std::vector<long long>{0, 2}, 3, [](const auto&, const Rational&) {}),
                    ncrw::EnumerationCapError);
  }
}
