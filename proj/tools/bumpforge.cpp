// bumpforge: build and inspect optimal compactly supported radial bump
// functions for shallow ReLU networks.
//
// Subcommands:
//   compute  solve one (d, scheme, eps) instance; write measure + profile
//   sweep    solve a dimension range; write sweep CSV + fitted-law JSON
//   verify   run the invariant suite over a dimension range
//   plot     render exported CSV data as a standalone SVG
//
// Exit codes: 0 ok, 2 usage error, 3 numerical failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bumpforge/bumpforge.hpp"

namespace bf = bumpforge;

namespace {

const std::map<std::string, bf::NodeScheme> kSchemes{
    {"optimal", bf::NodeScheme::Optimal},
    {"equidistant", bf::NodeScheme::Equidistant},
    {"chebyshev", bf::NodeScheme::Chebyshev}};

void require_odd_d(int d) {
  if (d < 3 || d % 2 == 0)
    throw CLI::ValidationError("--d", "d must be odd and >= 3, got " + std::to_string(d));
}

void require_quad(int q) {
  if (q < 11 || q % 2 == 0)
    throw CLI::ValidationError("--quad-points",
                               "quadrature points must be odd and >= 11, got " +
                                   std::to_string(q));
}

void require_eps(double eps) {
  if (eps < 0.0 || eps >= 1.0)
    throw CLI::ValidationError("--eps", "eps must lie in [0,1)");
}

std::vector<int> dim_range(int d_min, int d_max) {
  require_odd_d(d_min);
  require_odd_d(d_max);
  if (d_max < d_min) throw CLI::ValidationError("--d-max", "d-max must be >= d-min");
  std::vector<int> dims;
  for (int d = d_min; d <= d_max; d += 2) dims.push_back(d);
  return dims;
}

int cmd_compute(int d, bf::NodeScheme scheme, double eps, int quad_points,
                const std::string& out, const std::string& format) {
  require_odd_d(d);
  require_quad(quad_points);
  require_eps(eps);
  const int n = (d - 1) / 2;

  bf::MinimaxPoly mp = bf::remez_sqrt(n, eps * eps);
  bf::DiscreteMeasure m = bf::solve_moment_system(bf::nodes_for_scheme(scheme, n, eps));
  bf::RadialBump bump = bf::radial_bump(d, bf::build_g(m), bf::QuadConfig{quad_points});

  const std::string prefix =
      out.empty() ? "bump_d" + std::to_string(d) + "_" + bf::scheme_name(scheme) : out;
  if (format == "csv") {
    bf::atomic_write(prefix + "_measure.csv", bf::measure_csv(m));
    bf::atomic_write(prefix + "_profile.csv", bf::profile_csv(bump));
  } else {
    bf::atomic_write(prefix + "_measure.json", bf::measure_json(m));
    bf::atomic_write(prefix + "_profile.json", bf::profile_json(bump));
  }

  bf::io_detail::JsonObject o;
  o.add("d", d);
  o.add_str("scheme", bf::scheme_name(scheme));
  o.add("eps", eps);
  o.add("gamma", m.gamma);
  o.add("tv_even", m.tv_even);
  o.add("remez_level", bf::to_double(mp.level));
  o.add("lipschitz_bound", bf::lipschitz_bound(d, m.tv_even));
  std::cout << o.str();
  return 0;
}

int cmd_sweep(int d_min, int d_max, bf::NodeScheme scheme, double eps, int quad_points,
              const std::string& out, const std::string& format) {
  require_quad(quad_points);
  require_eps(eps);
  std::vector<int> dims = dim_range(d_min, d_max);

  std::vector<bf::SweepRecord> recs =
      bf::run_sweep(dims, scheme, eps, bf::QuadConfig{quad_points});
  const std::string prefix =
      out.empty() ? "sweep_" + std::string(bf::scheme_name(scheme)) : out;
  if (format == "csv")
    bf::atomic_write(prefix + "_sweep.csv", bf::sweep_csv(recs));
  else
    bf::atomic_write(prefix + "_sweep.json", bf::sweep_json(recs));
  if (recs.size() >= 2) {
    bf::atomic_write(prefix + "_fits.json", bf::sweep_fit_json(recs));
    std::cout << bf::sweep_fit_json(recs);
  } else {
    std::cout << bf::sweep_json(recs);
  }
  return 0;
}

int cmd_verify(int d_min, int d_max, bf::NodeScheme scheme, double eps, int quad_points,
               double corrupt_weight) {
  require_quad(quad_points);
  require_eps(eps);
  std::vector<int> dims = dim_range(d_min, d_max);

  std::string failures;
  for (int d : dims) {
    std::vector<std::string> fails;
    if (corrupt_weight != 0.0) {
      // fault-injection path: perturb one weight and check the measure
      bf::DiscreteMeasure m =
          bf::solve_moment_system(bf::nodes_for_scheme(scheme, (d - 1) / 2, eps));
      m.weights[0] += corrupt_weight;
      fails = bf::verify_measure(m);
    } else {
      fails = bf::verify_bump(d, scheme, eps, bf::QuadConfig{quad_points});
    }
    for (const std::string& f : fails) {
      failures += (failures.empty() ? "" : ",\n") + std::string("  {\"d\": ") +
                  std::to_string(d) + ", \"scheme\": \"" + bf::scheme_name(scheme) +
                  "\", \"invariant\": \"" + f + "\"}";
    }
  }
  std::cout << "[\n" << failures << (failures.empty() ? "]\n" : "\n]\n");
  return failures.empty() ? 0 : 1;
}

int cmd_plot(const std::vector<std::string>& inputs, const std::string& out, bool log_scale) {
  std::vector<bf::Series> series;
  bool sweep_mode = false;
  for (const std::string& path : inputs) {
    bf::CsvTable t = bf::read_csv(path);  // throws invalid_argument -> exit 2
    if (t.rows.empty()) throw std::invalid_argument("plot: no data rows in " + path);
    if (t.header.size() >= 2 && t.header[0] == "r") {
      bf::Series s;
      s.label = path;
      for (const auto& row : t.rows) {
        s.xs.push_back(row[0]);
        s.ys.push_back(row[1]);
      }
      series.push_back(std::move(s));
    } else if (!t.header.empty() && t.header[0] == "d") {
      // one series per scheme found in the file, gamma against d
      sweep_mode = true;
      std::map<std::string, bf::Series> by_scheme;
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::string& scheme = t.cells[i][1];
        bf::Series& s = by_scheme[scheme];
        s.label = scheme;
        s.xs.push_back(t.rows[i][0]);
        s.ys.push_back(t.rows[i][2]);
      }
      for (auto& [name, s] : by_scheme) series.push_back(std::move(s));
    } else {
      throw std::invalid_argument("plot: unrecognized CSV header in " + path);
    }
  }
  const std::string svg =
      sweep_mode ? bf::render_svg(series, "d", "gamma", log_scale, log_scale)
                 : bf::render_svg(series, "r", "f", false, log_scale);
  bf::atomic_write(out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal radial bump functions for shallow ReLU networks"};
  app.require_subcommand(1);

  int d = 3, d_min = 3, d_max = 11, quad_points = 1001;
  double eps = 0.0, lo = -1.0, corrupt_weight = 0.0;
  bf::NodeScheme scheme = bf::NodeScheme::Optimal;
  std::string out, format = "csv";
  std::vector<std::string> inputs;
  bool log_scale = false;

  auto add_common = [&](CLI::App* sub, bool ranged) {
    if (ranged) {
      sub->add_option("--d-min", d_min, "smallest dimension (odd, >= 3)");
      sub->add_option("--d-max", d_max, "largest dimension (odd, >= d-min)");
    } else {
      sub->add_option("--d", d, "dimension (odd, >= 3)");
    }
    sub->add_option("--scheme", scheme, "node placement scheme")
        ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
    sub->add_option("--eps", eps, "plateau radius in [0,1); 0 = plain bump");
    sub->add_option("--lo", lo, "alias for --eps (left node endpoint)");
    sub->add_option("--quad-points", quad_points, "quadrature node budget (odd, >= 11)");
  };

  CLI::App* compute = app.add_subcommand("compute", "solve one instance and export it");
  add_common(compute, false);
  compute->add_option("--out", out, "output path prefix");
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* sweep = app.add_subcommand("sweep", "solve a dimension range and export laws");
  add_common(sweep, true);
  sweep->add_option("--out", out, "output path prefix");
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, true);
  verify->add_option("--corrupt-weight", corrupt_weight,
                     "fault injection: add this to the first weight before checking");

  CLI::App* plot = app.add_subcommand("plot", "render profile/sweep CSVs to SVG");
  plot->add_option("input", inputs, "profile or sweep CSV files")->required();
  plot->add_option("--out", out, "output SVG path")->required();
  plot->add_flag("--log-scale", log_scale, "log axes (sweep) / log y (profile)");

  try {
    app.parse(argc, argv);
    if (lo >= 0.0) {
      if (eps != 0.0 && lo != eps)
        throw CLI::ValidationError("--lo", "--lo conflicts with --eps");
      eps = lo;
    }
    if (compute->parsed()) return cmd_compute(d, scheme, eps, quad_points, out, format);
    if (sweep->parsed()) return cmd_sweep(d_min, d_max, scheme, eps, quad_points, out, format);
    if (verify->parsed())
      return cmd_verify(d_min, d_max, scheme, eps, quad_points, corrupt_weight);
    if (plot->parsed()) return cmd_plot(inputs, out, log_scale);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bf::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
