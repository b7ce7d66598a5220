#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ncrw/continuum.hpp"
#include "ncrw/finite_kernel.hpp"
#include "ncrw/walk_polynomials.hpp"
#include "ncrw/infinite_system.hpp"
#include "ncrw/lattice_walk.hpp"
#include "ncrw/martingale.hpp"
#include "ncrw/mc_engine.hpp"
#include "ncrw/rational.hpp"
#include "ncrw/secant.hpp"

namespace py = pybind11;

namespace {

std::vector<ncrw::TimeSlice> to_slices(const std::vector<std::pair<long long, std::vector<long long>>>& points) {
  std::vector<ncrw::TimeSlice> slices;
  slices.reserve(points.size());
  for (const auto& [t, sites] : points) slices.push_back({t, sites});
  return slices;
}

std::vector<std::string> poly_fractions(const ncrw::Polynomial<ncrw::Rational>& p) {
  std::vector<std::string> out;
  out.reserve(p.degree() + 1);
  for (std::size_t i = 0; i <= p.degree(); ++i) out.push_back(ncrw::to_fraction_string(p.coeff(i)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ncrw, m) {
  m.doc() = "noncolliding random walk kernels, martingales, and sampling";

  py::class_<ncrw::SiteConfiguration>(m, "SiteConfiguration")
      .def(py::init<std::vector<long long>>(), py::arg("sites"))
      .def_property_readonly("sites", &ncrw::SiteConfiguration::sites)
      .def("__len__", &ncrw::SiteConfiguration::size);

  py::class_<ncrw::EquidistantConfig>(m, "EquidistantConfig")
      .def(py::init<int>(), py::arg("a"))
      .def_property_readonly("a", &ncrw::EquidistantConfig::a)
      .def_property_readonly("density", &ncrw::EquidistantConfig::density);

  m.def(
      "transition_prob",
      [](long long dt, long long x, long long y) {
        return ncrw::to_double(ncrw::transition_prob(dt, x, y));
      },
      py::arg("dt"), py::arg("x"), py::arg("y"));
  m.def(
      "transition_prob_exact",
      [](long long dt, long long x, long long y) {
        return ncrw::to_fraction_string(ncrw::transition_prob(dt, x, y));
      },
      py::arg("dt"), py::arg("x"), py::arg("y"));

  m.def(
      "walk_polynomial_coefficients",
      [](int degree, long long time) { return poly_fractions(ncrw::walk_polynomial(degree, time)); },
      py::arg("degree"), py::arg("time"),
      "coefficients of the monic walk martingale polynomial, constant term first, as fractions");
  m.def(
      "euler_coefficients",
      [](int degree, long long lam) { return poly_fractions(ncrw::euler_polynomial(degree, lam)); },
      py::arg("degree"), py::arg("lambda"));

  m.def("secant_density", &ncrw::secant_density, py::arg("x"));
  m.def("secant_cdf_inverse", &ncrw::secant_cdf_inverse, py::arg("q"));
  m.def("gh_secant_density", &ncrw::gh_secant_density, py::arg("t"), py::arg("x"));
  m.def(
      "sample_secant_path",
      [](std::uint64_t seed, std::uint64_t stream, int steps) {
        ncrw::SecantSampler sampler(seed, stream);
        return ncrw::sample_path(sampler, steps);
      },
      py::arg("seed"), py::arg("stream"), py::arg("steps"));

  m.def(
      "martingale_coefficients",
      [](const ncrw::SiteConfiguration& config, int k, long long t) {
        return poly_fractions(ncrw::martingale_poly(config, k, t));
      },
      py::arg("config"), py::arg("k"), py::arg("t"));
  m.def(
      "det_martingale",
      [](const ncrw::SiteConfiguration& config, long long t, const std::vector<long long>& positions) {
        return ncrw::to_fraction_string(ncrw::det_martingale(config, t, positions));
      },
      py::arg("config"), py::arg("t"), py::arg("positions"));
  m.def(
      "vandermonde_ratio",
      [](const std::vector<long long>& u, const std::vector<long long>& x) {
        return ncrw::to_fraction_string(ncrw::vandermonde_ratio(u, x));
      },
      py::arg("u"), py::arg("x"));

  m.def(
      "kernel_value",
      [](const ncrw::SiteConfiguration& config, long long s, long long x, long long t, long long y) {
        return ncrw::kernel_value(config, s, x, t, y);
      },
      py::arg("config"), py::arg("s"), py::arg("x"), py::arg("t"), py::arg("y"));
  m.def(
      "kernel_value_exact",
      [](const ncrw::SiteConfiguration& config, long long s, long long x, long long t, long long y) {
        return ncrw::to_fraction_string(ncrw::kernel_value_exact(config, s, x, t, y));
      },
      py::arg("config"), py::arg("s"), py::arg("x"), py::arg("t"), py::arg("y"));
  m.def(
      "correlation",
      [](const ncrw::SiteConfiguration& config,
         const std::vector<std::pair<long long, std::vector<long long>>>& points) {
        return ncrw::to_double(ncrw::correlation_exact(config, to_slices(points)));
      },
      py::arg("config"), py::arg("points"), "points as [(t, [sites...]), ...]");
  m.def(
      "correlation_exact",
      [](const ncrw::SiteConfiguration& config,
         const std::vector<std::pair<long long, std::vector<long long>>>& points) {
        return ncrw::to_fraction_string(ncrw::correlation_exact(config, to_slices(points)));
      },
      py::arg("config"), py::arg("points"));

  m.def(
      "infinite_kernel_value",
      [](const ncrw::EquidistantConfig& config, long long s, long long x, long long t, long long y) {
        return ncrw::kernel_value(config, s, x, t, y);
      },
      py::arg("config"), py::arg("s"), py::arg("x"), py::arg("t"), py::arg("y"));
  m.def("sine_kernel_discrete", &ncrw::sine_kernel_discrete, py::arg("rho"), py::arg("dt"),
        py::arg("dx"), py::arg("nodes") = 512);
  m.def(
      "relaxation_gap",
      [](const ncrw::EquidistantConfig& config, long long s, long long t, long long x, long long y,
         long long n) { return ncrw::relaxation_gap(config, s, t, x, y, n); },
      py::arg("config"), py::arg("s"), py::arg("t"), py::arg("x"), py::arg("y"), py::arg("n"));

  m.def("bm_density", &ncrw::bm_density, py::arg("t"), py::arg("x"), py::arg("y"));
  m.def("hermite_martingale", &ncrw::hermite_martingale, py::arg("n"), py::arg("t"), py::arg("x"));
  m.def(
      "dyson_kernel",
      [](const ncrw::SiteConfiguration& config, double s, double x, double t, double y) {
        return ncrw::dyson_kernel(config, s, x, t, y);
      },
      py::arg("config"), py::arg("s"), py::arg("x"), py::arg("t"), py::arg("y"));
  m.def("extended_sine_kernel", &ncrw::extended_sine_kernel, py::arg("rho"), py::arg("dt"),
        py::arg("dx"));
  m.def("theta3", &ncrw::theta3, py::arg("v"), py::arg("tau"), py::arg("terms") = 0);
  m.def("dyson_kernel_equidistant", &ncrw::dyson_kernel_equidistant, py::arg("a"), py::arg("s"),
        py::arg("x"), py::arg("t"), py::arg("y"), py::arg("nodes") = 512);

  m.def(
      "sample_weighted_summary",
      [](const ncrw::SiteConfiguration& config, int horizon, std::size_t n_samples,
         std::uint64_t seed, int streams,
         const std::vector<std::pair<long long, std::vector<long long>>>& points) {
        const auto ensemble = ncrw::sample_weighted(config, horizon, n_samples, seed, streams);
        double mean_weight = 0.0;
        for (const auto& sample : ensemble.samples) mean_weight += ncrw::to_double(sample.weight);
        mean_weight /= static_cast<double>(ensemble.samples.size());
        py::dict out;
        out["mean_weight"] = mean_weight;
        if (!points.empty()) {
          const auto est = ncrw::estimate_correlation(ensemble, to_slices(points));
          out["estimate"] = est.value;
          out["std_error"] = est.std_error;
        }
        return out;
      },
      py::arg("config"), py::arg("horizon"), py::arg("n_samples"), py::arg("seed"),
      py::arg("streams") = 1, py::arg("points") = std::vector<std::pair<long long, std::vector<long long>>>{});
}
