// Command-line front end: kernel tabulation, correlation queries, weighted
// sampling runs, and relaxation / diffusive-scaling studies.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncrw/continuum.hpp"
#include "ncrw/finite_kernel.hpp"
#include "ncrw/infinite_system.hpp"
#include "ncrw/lattice_walk.hpp"
#include "ncrw/martingale.hpp"
#include "ncrw/mc_engine.hpp"
#include "ncrw/parallel.hpp"
#include "ncrw/rational.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitCapExceeded = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

// "5" -> {5};  "-3..3" -> {-3,...,3};  "1,4..6" -> {1,4,5,6}
std::vector<long long> parse_int_values(const std::string& text) {
  std::vector<long long> values;
  if (text.empty()) return values;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      values.push_back(std::stoll(part));
    } else {
      const long long lo = std::stoll(part.substr(0, dots));
      const long long hi = std::stoll(part.substr(dots + 2));
      for (long long v = lo; v <= hi; ++v) values.push_back(v);
    }
  }
  return values;
}

std::vector<double> parse_real_values(const std::string& text) {
  std::vector<double> values;
  if (text.empty()) return values;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      values.push_back(std::stod(part));
    } else {
      const long long lo = std::stoll(part.substr(0, dots));
      const long long hi = std::stoll(part.substr(dots + 2));
      for (long long v = lo; v <= hi; ++v) values.push_back(static_cast<double>(v));
    }
  }
  return values;
}

// "s=1,t=1,x=-3..3,y=-3..3"
std::map<std::string, std::string> parse_grid_spec(const std::string& text) {
  std::map<std::string, std::string> grid;
  if (text.empty()) return grid;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("grid entry '" + part + "' is not key=value");
    }
    std::string& slot = grid[part.substr(0, eq)];
    if (!slot.empty()) slot += ",";
    slot += part.substr(eq + 1);
  }
  return grid;
}

// "1:1,3;2:0,4" -> slices at t=1 and t=2
std::vector<ncrw::TimeSlice> parse_points(const std::string& text) {
  std::vector<ncrw::TimeSlice> slices;
  for (const auto& group : split(text, ';')) {
    if (group.empty()) continue;
    const auto colon = group.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("point group '" + group + "' is not t:sites");
    }
    ncrw::TimeSlice slice;
    slice.t = std::stoll(group.substr(0, colon));
    slice.sites = parse_int_values(group.substr(colon + 1));
    slices.push_back(std::move(slice));
  }
  return slices;
}

ncrw::SiteConfiguration make_config(const std::string& sites_text) {
  return ncrw::SiteConfiguration(parse_int_values(sites_text));
}

std::ofstream open_or_die(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("NCRW_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

struct KernelOptions {
  std::string sites;
  int equidistant_a = 0;
  bool sine = false;
  bool dyson = false;
  std::string grid;
  std::string dt_spec;
  std::string dx_spec;
  std::string mode = "float";
  int nodes = 512;
  int threads = default_threads();
  std::string out_path;
};

void write_csv_rows(std::ostream& out, const std::vector<std::array<std::string, 6>>& rows) {
  out << "s,x,t,y,value,mode\n";
  for (const auto& row : rows) {
    out << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3] << ',' << row[4] << ','
        << row[5] << '\n';
  }
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(15);
  s << v;
  return s.str();
}

int run_kernel(const KernelOptions& opt) {
  std::vector<std::array<std::string, 6>> rows;

  if (opt.sine) {
    if (opt.equidistant_a < 2) throw std::invalid_argument("--sine needs --equidistant a >= 2");
    const double rho = 1.0 / (2.0 * opt.equidistant_a);
    const auto dts = parse_int_values(opt.dt_spec);
    const auto dxs = parse_int_values(opt.dx_spec);
    std::vector<std::pair<long long, long long>> cells;
    for (long long dt : dts) {
      for (long long dx : dxs) cells.emplace_back(dt, dx);
    }
    rows.resize(cells.size());
    ncrw::parallel_for(cells.size(), opt.threads, [&](std::size_t i) {
      const auto [dt, dx] = cells[i];
      const double v = ncrw::sine_kernel_discrete(rho, dt, dx, opt.nodes);
      rows[i] = {"0", "0", std::to_string(dt), std::to_string(dx), format_double(v), "sine"};
    });
  } else if (opt.dyson) {
    const auto grid = parse_grid_spec(opt.grid);
    const auto ss = parse_real_values(grid.count("s") ? grid.at("s") : "");
    const auto xs = parse_real_values(grid.count("x") ? grid.at("x") : "");
    const auto ts = parse_real_values(grid.count("t") ? grid.at("t") : "");
    const auto ys = parse_real_values(grid.count("y") ? grid.at("y") : "");
    std::vector<std::array<double, 4>> cells;
    for (double s : ss) {
      for (double x : xs) {
        for (double t : ts) {
          for (double y : ys) cells.push_back({s, x, t, y});
        }
      }
    }
    rows.resize(cells.size());
    if (opt.equidistant_a >= 2) {
      ncrw::parallel_for(cells.size(), opt.threads, [&](std::size_t i) {
        const auto [s, x, t, y] = cells[i];
        const double v = ncrw::dyson_kernel_equidistant(opt.equidistant_a, s, x, t, y, opt.nodes);
        rows[i] = {format_double(s), format_double(x), format_double(t), format_double(y),
                   format_double(v), "dyson-equidistant"};
      });
    } else {
      const auto config = make_config(opt.sites);
      ncrw::parallel_for(cells.size(), opt.threads, [&](std::size_t i) {
        const auto [s, x, t, y] = cells[i];
        const double v = ncrw::dyson_kernel(config, s, x, t, y);
        rows[i] = {format_double(s), format_double(x), format_double(t), format_double(y),
                   format_double(v), "dyson-finite"};
      });
    }
  } else {
    const auto grid = parse_grid_spec(opt.grid);
    const auto ss = parse_int_values(grid.count("s") ? grid.at("s") : "");
    const auto xs = parse_int_values(grid.count("x") ? grid.at("x") : "");
    const auto ts = parse_int_values(grid.count("t") ? grid.at("t") : "");
    const auto ys = parse_int_values(grid.count("y") ? grid.at("y") : "");
    std::vector<std::array<long long, 4>> cells;
    for (long long s : ss) {
      for (long long x : xs) {
        for (long long t : ts) {
          for (long long y : ys) cells.push_back({s, x, t, y});
        }
      }
    }
    rows.resize(cells.size());
    if (opt.equidistant_a >= 2) {
      const ncrw::EquidistantConfig config(opt.equidistant_a);
      ncrw::parallel_for(cells.size(), opt.threads, [&](std::size_t i) {
        const auto [s, x, t, y] = cells[i];
        const double v = ncrw::kernel_value(config, s, x, t, y,
                                            ncrw::InfiniteKernelRoute::automatic, opt.nodes);
        rows[i] = {std::to_string(s), std::to_string(x), std::to_string(t), std::to_string(y),
                   format_double(v), "equidistant"};
      });
    } else {
      const auto config = make_config(opt.sites);
      const bool exact = opt.mode == "exact";
      if (!exact && opt.mode != "float") throw std::invalid_argument("--mode must be exact or float");
      ncrw::parallel_for(cells.size(), opt.threads, [&](std::size_t i) {
        const auto [s, x, t, y] = cells[i];
        std::string value;
        if (exact) {
          value = ncrw::to_fraction_string(ncrw::kernel_value_exact(config, s, x, t, y));
        } else {
          value = format_double(ncrw::kernel_value(config, s, x, t, y));
        }
        rows[i] = {std::to_string(s), std::to_string(x), std::to_string(t), std::to_string(y),
                   value, opt.mode};
      });
    }
  }

  if (opt.out_path.empty()) {
    write_csv_rows(std::cout, rows);
  } else {
    auto out = open_or_die(opt.out_path);
    write_csv_rows(out, rows);
  }
  return 0;
}

struct CorrelateOptions {
  std::string sites;
  std::string points;
  std::string mode = "exact";
  bool oracle = false;
  int cap = 24;
  std::string out_path;
};

int run_correlate(const CorrelateOptions& opt) {
  const auto config = make_config(opt.sites);
  const auto slices = parse_points(opt.points);
  if (slices.empty()) throw std::invalid_argument("correlate: --points must name at least one site");

  json result;
  auto& points = result["points"];
  points = json::array();
  bool parity_ok = true;
  for (const auto& slice : slices) {
    json group;
    group["t"] = slice.t;
    group["sites"] = slice.sites;
    points.push_back(group);
    for (long long site : slice.sites) {
      if (!ncrw::site_supported(slice.t, site)) parity_ok = false;
    }
  }
  result["method"] = "kernel-determinant";
  result["parity"] = parity_ok ? "ok" : "violated";

  if (opt.mode == "exact") {
    const ncrw::Rational value = ncrw::correlation_exact(config, slices);
    result["value"] = ncrw::to_double(value);
    result["value_exact"] = ncrw::to_fraction_string(value);
  } else if (opt.mode == "float") {
    result["value"] = ncrw::correlation(config, slices);
  } else {
    throw std::invalid_argument("--mode must be exact or float");
  }

  if (opt.oracle) {
    long long horizon = 0;
    for (const auto& slice : slices) horizon = std::max(horizon, slice.t);
    const ncrw::PathEnumerator enumerator(opt.cap);
    const ncrw::Rational oracle_value = ncrw::exact_conditional_expectation(
        config, static_cast<int>(horizon),
        [&](const std::vector<std::vector<long long>>& paths) {
          for (const auto& slice : slices) {
            for (long long site : slice.sites) {
              bool found = false;
              for (const auto& path : paths) {
                if (path[slice.t] == site) {
                  found = true;
                  break;
                }
              }
              if (!found) return ncrw::Rational(0);
            }
          }
          return ncrw::Rational(1);
        },
        enumerator);
    result["oracle"] = {{"value_exact", ncrw::to_fraction_string(oracle_value)},
                        {"matches", opt.mode == "exact"
                                        ? oracle_value == ncrw::correlation_exact(config, slices)
                                        : std::abs(ncrw::to_double(oracle_value) -
                                                   result["value"].get<double>()) < 1e-9}};
  }

  if (opt.out_path.empty()) {
    std::cout << result.dump(2) << '\n';
  } else {
    auto out = open_or_die(opt.out_path);
    out << result.dump(2) << '\n';
  }
  return 0;
}

struct SampleOptions {
  std::string sites;
  int horizon = 1;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int streams = default_threads();
  std::string points;
  bool exact = false;
  int cap = 24;
  std::string out_path;
};

int run_sample(const SampleOptions& opt) {
  const auto config = make_config(opt.sites);
  const auto ensemble = ncrw::sample_weighted(config, opt.horizon, opt.samples, opt.seed, opt.streams);

  double mean_weight = 0.0, sq = 0.0;
  for (const auto& sample : ensemble.samples) {
    const double w = ncrw::to_double(sample.weight);
    mean_weight += w;
    sq += w * w;
  }
  const auto n = static_cast<double>(ensemble.samples.size());
  mean_weight /= n;
  const double weight_se = std::sqrt(std::max(0.0, (sq / n - mean_weight * mean_weight) / (n - 1.0)));

  json summary;
  summary["mean_weight"] = mean_weight;
  summary["std_error_weight"] = weight_se;
  summary["seed"] = opt.seed;
  summary["streams"] = opt.streams;

  std::optional<std::vector<ncrw::TimeSlice>> slices;
  if (!opt.points.empty()) {
    slices = parse_points(opt.points);
    const auto est = ncrw::estimate_correlation(ensemble, *slices);
    summary["estimate"] = est.value;
    summary["std_error"] = est.std_error;
  }

  if (opt.exact) {
    const ncrw::PathEnumerator enumerator(opt.cap);
    summary["mean_weight_exact"] = ncrw::to_fraction_string(ncrw::exact_conditional_expectation(
        config, opt.horizon, [](const auto&) { return ncrw::Rational(1); }, enumerator));
    if (slices) {
      const ncrw::Rational exact_corr = ncrw::exact_conditional_expectation(
          config, opt.horizon,
          [&](const std::vector<std::vector<long long>>& paths) {
            for (const auto& slice : *slices) {
              for (long long site : slice.sites) {
                bool found = false;
                for (const auto& path : paths) {
                  if (path[slice.t] == site) {
                    found = true;
                    break;
                  }
                }
                if (!found) return ncrw::Rational(0);
              }
            }
            return ncrw::Rational(1);
          },
          enumerator);
      summary["exact"] = ncrw::to_fraction_string(exact_corr);
    }
  }

  const auto emit = [&](std::ostream& out) {
    ncrw::dump_jsonl(ensemble, out);
    out << json{{"summary", summary}}.dump() << '\n';
  };
  if (opt.out_path.empty()) {
    emit(std::cout);
  } else {
    auto out = open_or_die(opt.out_path);
    emit(out);
  }
  return 0;
}

struct StudyOptions {
  std::string kind = "relaxation";
  int a = 2;
  std::string sites;
  std::string n_grid = "4,16,64,256";
  std::string dt_spec = "-2..2";
  std::string dx_spec = "-8..8";
  double t = 1.0;
  double x = 0.0;
  double y = 0.0;
  int threads = default_threads();
  std::string out_path;
};

int run_study(const StudyOptions& opt) {
  std::ostringstream csv;
  if (opt.kind == "relaxation") {
    const ncrw::EquidistantConfig config(opt.a);
    const auto ns = parse_int_values(opt.n_grid);
    const auto dts = parse_int_values(opt.dt_spec);
    const auto dxs = parse_int_values(opt.dx_spec);
    csv << "n,gap\n";
    std::vector<double> gaps(ns.size(), 0.0);
    ncrw::parallel_for(ns.size(), opt.threads, [&](std::size_t i) {
      const long long n = ns[i];
      double worst = 0.0;
      for (long long dt : dts) {
        for (long long dx : dxs) {
          if (((dt + dx) % 2 + 2) % 2 != 0) continue;
          const long long s = dt < 0 ? -dt : 0;
          const long long t = dt < 0 ? 0 : dt;
          const long long x = (s + n) % 2 == 0 ? 0 : 1;
          const long long y = x + dx;
          worst = std::max(worst, ncrw::relaxation_gap(config, s, t, x, y, n));
        }
      }
      gaps[i] = worst;
    });
    for (std::size_t i = 0; i < ns.size(); ++i) csv << ns[i] << ',' << format_double(gaps[i]) << '\n';
  } else if (opt.kind == "convergence") {
    const auto config = make_config(opt.sites);
    const auto ns = parse_int_values(opt.n_grid);
    csv << "n,clt_gap,m_gap\n";
    std::vector<ncrw::ScalingGaps> gaps(ns.size());
    ncrw::parallel_for(ns.size(), opt.threads, [&](std::size_t i) {
      gaps[i] = ncrw::convergence_gap(config, static_cast<int>(ns[i]), opt.t, opt.x, opt.y);
    });
    for (std::size_t i = 0; i < ns.size(); ++i) {
      csv << ns[i] << ',' << format_double(gaps[i].local_clt) << ','
          << format_double(gaps[i].martingale) << '\n';
    }
  } else {
    throw std::invalid_argument("--kind must be relaxation or convergence");
  }

  if (opt.out_path.empty()) {
    std::cout << csv.str();
  } else {
    auto out = open_or_die(opt.out_path);
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncolliding random walk kernels, correlations, and sampling"};
  app.require_subcommand(1);

  KernelOptions kernel_opt;
  auto* kernel = app.add_subcommand("kernel", "tabulate correlation kernels over a grid (CSV)");
  kernel->add_option("--sites", kernel_opt.sites, "finite configuration, e.g. 0,2");
  kernel->add_option("--equidistant", kernel_opt.equidistant_a, "equidistant spacing parameter a >= 2");
  kernel->add_flag("--sine", kernel_opt.sine, "stationary kernel over (dt, dx)");
  kernel->add_flag("--dyson", kernel_opt.dyson, "continuum kernel");
  kernel->add_option("--grid", kernel_opt.grid, "grid spec, e.g. s=1,t=1,x=-3..3,y=-3..3");
  kernel->add_option("--dt", kernel_opt.dt_spec, "time lags for --sine");
  kernel->add_option("--dx", kernel_opt.dx_spec, "displacements for --sine");
  kernel->add_option("--mode", kernel_opt.mode, "exact|float (finite kernel only)");
  kernel->add_option("--nodes", kernel_opt.nodes, "quadrature nodes");
  kernel->add_option("--threads", kernel_opt.threads, "worker threads")->envname("NCRW_THREADS");
  kernel->add_option("--out", kernel_opt.out_path, "output file (default stdout)");

  CorrelateOptions corr_opt;
  auto* correlate = app.add_subcommand("correlate", "correlation functions as kernel determinants (JSON)");
  correlate->add_option("--sites", corr_opt.sites, "finite configuration")->required();
  correlate->add_option("--points", corr_opt.points, "space-time points, e.g. 1:1;2:0,4")->required();
  correlate->add_option("--mode", corr_opt.mode, "exact|float");
  correlate->add_flag("--oracle", corr_opt.oracle, "cross-check against exhaustive enumeration");
  correlate->add_option("--cap", corr_opt.cap, "enumeration cap (total increments)");
  correlate->add_option("--out", corr_opt.out_path, "output file (default stdout)");

  SampleOptions sample_opt;
  auto* sample = app.add_subcommand("sample", "weighted ensemble sampling (JSON lines)");
  sample->add_option("--sites", sample_opt.sites, "finite configuration")->required();
  sample->add_option("--horizon", sample_opt.horizon, "number of steps")->required();
  sample->add_option("--samples", sample_opt.samples, "number of samples");
  sample->add_option("--seed", sample_opt.seed, "RNG seed");
  sample->add_option("--streams", sample_opt.streams, "sampling streams")->envname("NCRW_THREADS");
  sample->add_option("--points", sample_opt.points, "points for the correlation estimate");
  sample->add_flag("--exact", sample_opt.exact, "add exact enumeration values");
  sample->add_option("--cap", sample_opt.cap, "enumeration cap (total increments)");
  sample->add_option("--out", sample_opt.out_path, "output file (default stdout)");

  StudyOptions study_opt;
  auto* study = app.add_subcommand("study", "relaxation / diffusive-scaling sweeps (CSV)");
  study->add_option("--kind", study_opt.kind, "relaxation|convergence");
  study->add_option("--a", study_opt.a, "equidistant spacing parameter");
  study->add_option("--sites", study_opt.sites, "finite configuration (convergence)");
  study->add_option("--n-grid", study_opt.n_grid, "sweep values of n");
  study->add_option("--dt", study_opt.dt_spec, "time lags (relaxation)");
  study->add_option("--dx", study_opt.dx_spec, "displacements (relaxation)");
  study->add_option("--t", study_opt.t, "scaled time (convergence)");
  study->add_option("--x", study_opt.x, "scaled source (convergence)");
  study->add_option("--y", study_opt.y, "scaled target (convergence)");
  study->add_option("--threads", study_opt.threads, "worker threads")->envname("NCRW_THREADS");
  study->add_option("--out", study_opt.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*kernel) return run_kernel(kernel_opt);
    if (*correlate) return run_correlate(corr_opt);
    if (*sample) return run_sample(sample_opt);
    if (*study) return run_study(study_opt);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitConfig;
  } catch (const ncrw::EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
