#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ncrw/continuum.hpp"
#include "ncrw/quadrature.hpp"

using ncrw::bm_density;
using ncrw::dyson_kernel;
using ncrw::dyson_kernel_equidistant;
using ncrw::dyson_kernel_equidistant_direct;
using ncrw::dyson_martingale;
using ncrw::extended_sine_kernel;
using ncrw::hermite_martingale;
using ncrw::SiteConfiguration;
using ncrw::theta3;

TEST_CASE("heat kernel") {
  CHECK(bm_density(1.0, 0.0, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));
  CHECK(bm_density(0.7, 1.3, -0.4) == bm_density(0.7, -0.4, 1.3));
  const double mass = ncrw::integrate_composite([](double y) { return bm_density(2.0, 0.5, y); },
                                                0.5 - 14.0, 0.5 + 14.0, 28, 64);
  CHECK(std::abs(mass - 1.0) < 1e-12);
  CHECK_THROWS_AS(bm_density(0.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bm_density(-1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("Brownian polynomial martingales") {
  SUBCASE("closed forms") {
    for (double t : {0.0, 0.5, 2.0}) {
      for (double x : {-1.5, 0.0, 2.25}) {
        CHECK(hermite_martingale(0, t, x) == 1.0);
        CHECK(hermite_martingale(1, t, x) == x);
        CHECK(hermite_martingale(2, t, x) == doctest::Approx(x * x - t).epsilon(1e-14));
        CHECK(hermite_martingale(3, t, x) == doctest::Approx(x * x * x - 3 * t * x).epsilon(1e-14));
      }
    }
    CHECK(hermite_martingale(5, 0.0, 1.5) == doctest::Approx(std::pow(1.5, 5)).epsilon(1e-14));
  }

  SUBCASE("three-term recurrence") {
    for (int n = 1; n <= 7; ++n) {
      for (double t : {0.0, 0.6, 3.0}) {
        for (double x : {-2.0, 0.3, 1.7}) {
          const double lhs = hermite_martingale(n + 1, t, x);
          const double rhs =
              x * hermite_martingale(n, t, x) - n * t * hermite_martingale(n - 1, t, x);
          CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
      }
    }
  }

  SUBCASE("heat equation by finite differences") {
    const double h = 1e-4;
    for (int n = 1; n <= 6; ++n) {
      for (double t : {0.5, 1.0, 4.0}) {
        for (double x : {-1.0, 0.4, 2.0}) {
          const double dt =
              (hermite_martingale(n, t + h, x) - hermite_martingale(n, t - h, x)) / (2 * h);
          const double dxx = (hermite_martingale(n, t, x + h) - 2 * hermite_martingale(n, t, x) +
                              hermite_martingale(n, t, x - h)) /
                             (h * h);
          // the second difference carries a roundoff floor of eps*|m|/h^2
          const double scale =
              1.0 + std::abs(dt) + 0.5 * std::abs(dxx) + std::abs(hermite_martingale(n, t, x));
          CHECK(std::abs(dt + 0.5 * dxx) < 1e-6 * scale);
        }
      }
    }
  }
}

TEST_CASE("continuum martingale functions") {
  SUBCASE("degree-one case is time independent") {
    const SiteConfiguration config({0, 2});
    for (double t : {0.0, 1.0, 9.5}) {
      for (double y : {-2.0, 0.5, 3.0}) {
        CHECK(dyson_martingale(config, 0, t, y) == doctest::Approx(0.5 * (2.0 - y)).epsilon(1e-14));
      }
    }
  }

  SUBCASE("interpolation property in the short-time limit") {
    const SiteConfiguration config({-2, 0, 4});
    for (int k = 0; k < config.size(); ++k) {
      for (int j = 0; j < config.size(); ++j) {
        CHECK(dyson_martingale(config, k, 1e-12, double(config.site(j))) ==
              doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-9));
      }
    }
  }

  SUBCASE("quadrature over the imaginary Gaussian reproduces hermite substitution") {
    const SiteConfiguration config({-2, 0, 4, 8});
    for (double t : {0.5, 2.0}) {
      for (int k : {0, 3}) {
        const auto basis = ncrw::lagrange_basis(config, k);
        for (double x : {-1.0, 1.5, 5.0}) {
          const double direct = dyson_martingale(config, k, t, x);
          const double integrated = ncrw::integrate_composite(
              [&](double v) {
                const std::complex<double> z(x, v);
                std::complex<double> horner(ncrw::to_double(basis.coeff(basis.degree())), 0.0);
                for (std::size_t i = basis.degree(); i-- > 0;) {
                  horner = horner * z + std::complex<double>(ncrw::to_double(basis.coeff(i)), 0.0);
                }
                return bm_density(t, 0.0, v) * horner.real();
              },
              -10.0 * std::sqrt(t), 10.0 * std::sqrt(t), 20, 64);
          CHECK(integrated == doctest::Approx(direct).epsilon(1e-8));
        }
      }
    }
  }
}

TEST_CASE("Dyson kernel for finite configurations") {
  SUBCASE("trace integrates to the particle count") {
    for (const auto& sites : {std::vector<long long>{0, 2}, std::vector<long long>{-2, 0, 4}}) {
      const SiteConfiguration config(sites);
      for (double t : {0.5, 1.0, 3.0}) {
        const double lo = sites.front() - 8.0 * std::sqrt(t) - 1.0;
        const double hi = sites.back() + 8.0 * std::sqrt(t) + 1.0;
        const double trace = ncrw::integrate_composite(
            [&](double x) { return dyson_kernel(config, t, x, t, x); }, lo, hi,
            int(hi - lo) + 1, 64);
        CHECK(trace == doctest::Approx(double(config.size())).epsilon(1e-6));
      }
    }
  }

  SUBCASE("time ordering enters through the backward correction") {
    const SiteConfiguration config({0, 2});
    const double forward = dyson_kernel(config, 0.5, 1.0, 1.5, 0.0);
    const double backward = dyson_kernel(config, 1.5, 1.0, 0.5, 0.0);
    CHECK(forward != doctest::Approx(backward).epsilon(1e-6));
  }
}

TEST_CASE("extended sine kernel") {
  SUBCASE("equal-time branch") {
    for (double rho : {0.25, 0.1, 1.0}) {
      CHECK(extended_sine_kernel(rho, 0.0, 0.0) == rho);
      for (double dx : {0.5, 2.0, 7.0}) {
        CHECK(extended_sine_kernel(rho, 0.0, dx) ==
              doctest::Approx(std::sin(M_PI * rho * dx) / (M_PI * dx)).epsilon(1e-12));
      }
      // first zero of the equal-time profile sits at dx = 1/rho
      CHECK(std::abs(extended_sine_kernel(rho, 0.0, 1.0 / rho)) < 1e-10);
    }
  }

  SUBCASE("backward branch equals forward integral minus the heat kernel") {
    for (double rho : {0.25, 1.0}) {
      for (double dt : {-0.5, -2.0}) {
        for (double dx : {0.0, 1.0, 3.0}) {
          const double backward = extended_sine_kernel(rho, dt, dx);
          const double forward_part = ncrw::integrate(
              [&](double u) {
                return std::exp(0.5 * M_PI * M_PI * u * u * dt) * std::cos(M_PI * u * dx);
              },
              0.0, rho, 512);
          const double heat = std::exp(-dx * dx / (2.0 * (-dt))) / std::sqrt(2.0 * M_PI * (-dt));
          CHECK(backward == doctest::Approx(forward_part - heat).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("theta function") {
  SUBCASE("integer shift periodicity") {
    const std::complex<double> tau(0.3, 0.8);
    for (const std::complex<double> v : {std::complex<double>(0.2, 0.0),
                                         std::complex<double>(-0.7, 0.1)}) {
      CHECK(std::abs(theta3(v + 1.0, tau) - theta3(v, tau)) < 1e-14);
    }
  }

  SUBCASE("self-dual point and generic reciprocity") {
    CHECK(ncrw::theta3_reciprocity_gap({0.0, 0.0}, {0.0, 1.0}) < 1e-12);
    CHECK(ncrw::theta3_reciprocity_gap({0.3, 0.0}, {0.0, 0.45}) < 1e-12);
    CHECK(ncrw::theta3_reciprocity_gap({0.1, 0.2}, {0.2, 1.3}) < 1e-12);
  }

  SUBCASE("large Im(tau) truncates to two terms") {
    const std::complex<double> v(0.37, 0.0);
    const std::complex<double> tau(0.0, 12.0);
    const std::complex<double> expected =
        1.0 + 2.0 * std::exp(M_PI * std::complex<double>(0.0, 1.0) * tau) *
                  std::cos(2.0 * M_PI * v);
    CHECK(std::abs(theta3(v, tau) - expected) < 1e-30);
  }

  SUBCASE("domain guard") {
    CHECK_THROWS_AS(theta3({0.0, 0.0}, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(theta3({0.0, 0.0}, {0.5, -1.0}), std::domain_error);
  }
}

TEST_CASE("equidistant Dyson kernel: theta form against the direct sum") {
  const int a = 2;
  for (double s : {0.5, 1.0, 2.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      for (double x : {-4.0, -2.0, 0.0, 2.0, 4.0}) {
        for (double y : {-4.0, 0.0, 3.0}) {
          const double closed = dyson_kernel_equidistant(a, s, x, t, y);
          const double direct = dyson_kernel_equidistant_direct(a, s, x, t, y);
          CHECK(closed == doctest::Approx(direct).epsilon(1e-8));
        }
      }
    }
  }

  SUBCASE("long times relax onto the extended sine kernel at rate 1/s") {
    // the theta correction carries a boundary layer of width ~1/(rho^2 s)
    // near |lam| = pi, so the approach is algebraic, not exponential
    const double direct60 = dyson_kernel_equidistant_direct(a, 60.0, 0.0, 60.0, 0.0);
    CHECK(dyson_kernel_equidistant(a, 60.0, 0.0, 60.0, 0.0) ==
          doctest::Approx(direct60).epsilon(1e-7));
    for (double dx : {0.0, 2.0}) {
      std::vector<double> errs;
      for (double s : {20.0, 80.0, 320.0}) {
        errs.push_back(std::abs(dyson_kernel_equidistant(a, s, 0.0, s, dx) -
                                extended_sine_kernel(0.25, 0.0, dx)));
      }
      CHECK(errs[1] < 0.5 * errs[0]);
      CHECK(errs[2] < 0.5 * errs[1]);
      CHECK(errs[2] < 2e-3);
    }
  }
}

TEST_CASE("diffusive scaling gaps") {
  SUBCASE("local CLT gap shrinks as n doubles") {
    std::vector<double> gaps;
    for (int n : {4, 8, 16, 32}) gaps.push_back(ncrw::local_clt_gap(n, 1.0, 0.0, 0.0));
    for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i] < gaps[i - 1]);
  }

  SUBCASE("degree-one martingale gap is identically zero") {
    const SiteConfiguration config({0, 2});
    for (int n : {4, 8, 16, 32}) {
      CHECK(ncrw::martingale_scaling_gap(config, n, 1.0, 0.0) == 0.0);
    }
  }

  SUBCASE("martingale gap vanishes identically below degree four") {
    // the walk and Brownian martingale polynomials share the same closed
    // forms through degree 3, so the scaled discrete functions match the
    // continuum ones exactly for up to four sites
    for (const auto& sites : {std::vector<long long>{0, 2, 4}, std::vector<long long>{-2, 0, 2, 6}}) {
      const SiteConfiguration config(sites);
      for (int n : {4, 8, 16, 32}) {
        CHECK(ncrw::martingale_scaling_gap(config, n, 1.0, 0.0) < 1e-13);
      }
    }
  }

  SUBCASE("five-particle martingale gap shrinks like 1/n^2") {
    const SiteConfiguration config({0, 2, 4, 6, 8});
    std::vector<double> gaps;
    for (int n : {4, 8, 16, 32}) gaps.push_back(ncrw::martingale_scaling_gap(config, n, 1.0, 0.0));
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      CHECK(gaps[i] < gaps[i - 1]);
      CHECK(gaps[i] == doctest::Approx(0.25 * gaps[i - 1]).epsilon(0.05));
    }
  }

  SUBCASE("parity and integrality guards") {
    CHECK_THROWS_AS(ncrw::local_clt_gap(3, 0.5, 0.0, 0.0), std::domain_error);  // n^2 t not integral
    CHECK_THROWS_AS(ncrw::local_clt_gap(2, 1.0, 0.0, 0.5), std::domain_error);  // odd parity
    const SiteConfiguration config({0, 2});
    CHECK_THROWS_AS(ncrw::martingale_scaling_gap(config, 3, 1.0, 0.0), std::invalid_argument);
  }
}
