#ifndef BUMPFORGE_IO_HPP
#define BUMPFORGE_IO_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bumpforge/analysis.hpp"
#include "bumpforge/moments.hpp"
#include "bumpforge/profile.hpp"

namespace bumpforge {

/// Shortest decimal that round-trips a double (17 significant digits).
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Write-and-rename so readers never observe a partial file.
inline void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("atomic_write: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("atomic_write: rename failed for " + path);
}

inline std::string measure_csv(const DiscreteMeasure& m) {
  std::string out = "i,s_i,mu_i\n";
  for (std::size_t i = 0; i < m.weights.size(); ++i)
    out += std::to_string(i) + "," + fmt17(m.nodes.points[i]) + "," + fmt17(m.weights[i]) + "\n";
  return out;
}

/// 1001 radii on [0, 1.2] with f and f'.
inline std::string profile_csv(const RadialBump& b, int rows = 1001, double r_max = 1.2) {
  std::string out = "r,f,f_prime\n";
  for (int i = 0; i < rows; ++i) {
    double r = r_max * double(i) / double(rows - 1);
    out += fmt17(r) + "," + fmt17(eval_f(b, r)) + "," + fmt17(eval_f_prime(b, r)) + "\n";
  }
  return out;
}

inline std::string sweep_csv(const std::vector<SweepRecord>& recs) {
  std::string out =
      "d,scheme,gamma,gamma_over_d,remez_level,lipschitz_bound,max_abs_fprime,"
      "radial_l1,ball_avg\n";
  for (const SweepRecord& r : recs)
    out += std::to_string(r.d) + "," + scheme_name(r.scheme) + "," + fmt17(r.gamma) + "," +
           fmt17(r.gamma_over_d) + "," + fmt17(r.remez_level) + "," +
           fmt17(r.lipschitz_bound) + "," + fmt17(r.max_abs_fprime) + "," +
           fmt17(r.radial_l1) + "," + fmt17(r.ball_avg) + "\n";
  return out;
}

namespace io_detail {

struct JsonObject {
  std::string body;
  void add(const std::string& key, const std::string& raw) {
    body += (body.empty() ? "" : ",\n") + std::string("  \"") + key + "\": " + raw;
  }
  void add(const std::string& key, double v) { add(key, fmt17(v)); }
  void add(const std::string& key, int v) { add(key, std::to_string(v)); }
  void add_str(const std::string& key, const std::string& v) { add(key, "\"" + v + "\""); }
  std::string str() const { return "{\n" + body + "\n}\n"; }
};

}  // namespace io_detail

inline std::string measure_json(const DiscreteMeasure& m) {
  std::string nodes, weights;
  for (std::size_t i = 0; i < m.weights.size(); ++i) {
    nodes += (i ? ", " : "") + fmt17(m.nodes.points[i]);
    weights += (i ? ", " : "") + fmt17(m.weights[i]);
  }
  io_detail::JsonObject o;
  o.add("n", m.nodes.n);
  o.add_str("scheme", scheme_name(m.nodes.scheme));
  o.add("nodes", "[" + nodes + "]");
  o.add("weights", "[" + weights + "]");
  o.add("gamma", m.gamma);
  o.add("tv_even", m.tv_even);
  return o.str();
}

inline std::string profile_json(const RadialBump& b, int rows = 1001, double r_max = 1.2) {
  std::string r_arr, f_arr, fp_arr;
  for (int i = 0; i < rows; ++i) {
    double r = r_max * double(i) / double(rows - 1);
    r_arr += (i ? ", " : "") + fmt17(r);
    f_arr += (i ? ", " : "") + fmt17(eval_f(b, r));
    fp_arr += (i ? ", " : "") + fmt17(eval_f_prime(b, r));
  }
  io_detail::JsonObject o;
  o.add("d", b.d);
  o.add("r", "[" + r_arr + "]");
  o.add("f", "[" + f_arr + "]");
  o.add("f_prime", "[" + fp_arr + "]");
  return o.str();
}

inline std::string sweep_json(const std::vector<SweepRecord>& recs) {
  std::string rows;
  for (const SweepRecord& r : recs) {
    io_detail::JsonObject o;
    o.add("d", r.d);
    o.add_str("scheme", scheme_name(r.scheme));
    o.add("gamma", r.gamma);
    o.add("gamma_over_d", r.gamma_over_d);
    o.add("remez_level", r.remez_level);
    o.add("lipschitz_bound", r.lipschitz_bound);
    o.add("max_abs_fprime", r.max_abs_fprime);
    o.add("radial_l1", r.radial_l1);
    o.add("ball_avg", r.ball_avg);
    rows += (rows.empty() ? "" : ",\n") + o.str();
  }
  return "[\n" + rows + "]\n";
}

/// Fitted laws across a sweep: power laws in d for gamma / radial_l1 /
/// ball_avg, plus the exponential-in-d fit of gamma (the relevant law for
/// plateau sweeps).
inline std::string sweep_fit_json(const std::vector<SweepRecord>& recs) {
  std::vector<double> ds, gammas, l1s, avgs;
  for (const SweepRecord& r : recs) {
    ds.push_back(double(r.d));
    gammas.push_back(r.gamma);
    l1s.push_back(r.radial_l1);
    avgs.push_back(r.ball_avg);
  }
  PowerLawFit pg = fit_power_law(ds, gammas);
  PowerLawFit pl = fit_power_law(ds, l1s);
  PowerLawFit pa = fit_power_law(ds, avgs);
  ExpLawFit eg = fit_exp_law(ds, gammas);
  ExpLawFit ea = fit_exp_law(ds, avgs);
  io_detail::JsonObject o;
  o.add_str("scheme", scheme_name(recs.front().scheme));
  o.add("gamma_power_coeff", pg.coeff);
  o.add("gamma_power_exponent", pg.exponent);
  o.add("radial_l1_power_exponent", pl.exponent);
  o.add("ball_avg_power_exponent", pa.exponent);
  o.add("ball_avg_exp_slope", ea.slope);
  o.add("gamma_exp_slope", eg.slope);
  o.add("gamma_exp_intercept", eg.intercept);
  return o.str();
}

// ---- SVG rendering --------------------------------------------------------

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
};

namespace io_detail {

inline const char* series_color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return palette[i % 8];
}

}  // namespace io_detail

/// Standalone SVG line chart. log_x / log_y switch the respective axis to
/// log10; non-positive samples are dropped on a log axis.
inline std::string render_svg(const std::vector<Series>& series, const std::string& x_label,
                              const std::string& y_label, bool log_x = false,
                              bool log_y = false) {
  const int width = 720, height = 480, ml = 64, mr = 16, mt = 16, mb = 48;
  auto tx = [log_x](double v) { return log_x ? std::log10(v) : v; };
  auto ty = [log_y](double v) { return log_y ? std::log10(v) : v; };

  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  bool first = true;
  for (const Series& s : series)
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if ((log_x && s.xs[i] <= 0.0) || (log_y && s.ys[i] <= 0.0)) continue;
      double x = tx(s.xs[i]), y = ty(s.ys[i]);
      if (first) {
        x0 = x1 = x;
        y0 = y1 = y;
        first = false;
      } else {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
      }
    }
  if (first) throw std::invalid_argument("render_svg: no plottable samples");
  if (x1 - x0 < 1e-300) x1 = x0 + 1.0;
  if (y1 - y0 < 1e-300) y1 = y0 + 1.0;

  auto px = [&](double x) { return ml + (tx(x) - x0) / (x1 - x0) * (width - ml - mr); };
  auto py = [&](double y) { return height - mb - (ty(y) - y0) / (y1 - y0) * (height - mt - mb); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(height - mb) +
         "\" x2=\"" + std::to_string(width - mr) + "\" y2=\"" + std::to_string(height - mb) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt) + "\" x2=\"" +
         std::to_string(ml) + "\" y2=\"" + std::to_string(height - mb) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + std::to_string((ml + width - mr) / 2) + "\" y=\"" +
         std::to_string(height - 12) + "\" text-anchor=\"middle\" font-size=\"14\">" + x_label +
         (log_x ? " (log)" : "") + "</text>\n";
  svg += "<text x=\"16\" y=\"" + std::to_string((mt + height - mb) / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 " +
         std::to_string((mt + height - mb) / 2) + ")\">" + y_label + (log_y ? " (log)" : "") +
         "</text>\n";
  // axis range labels
  svg += "<text x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(height - mb + 18) +
         "\" font-size=\"12\">" + num(x0) + "</text>\n";
  svg += "<text x=\"" + std::to_string(width - mr) + "\" y=\"" +
         std::to_string(height - mb + 18) + "\" text-anchor=\"end\" font-size=\"12\">" + num(x1) +
         "</text>\n";
  svg += "<text x=\"" + std::to_string(ml - 6) + "\" y=\"" + std::to_string(height - mb) +
         "\" text-anchor=\"end\" font-size=\"12\">" + num(y0) + "</text>\n";
  svg += "<text x=\"" + std::to_string(ml - 6) + "\" y=\"" + std::to_string(mt + 10) +
         "\" text-anchor=\"end\" font-size=\"12\">" + num(y1) + "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    std::string pts;
    for (std::size_t i = 0; i < series[si].xs.size(); ++i) {
      if ((log_x && series[si].xs[i] <= 0.0) || (log_y && series[si].ys[i] <= 0.0)) continue;
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(series[si].xs[i]), py(series[si].ys[i]));
      pts += buf;
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(io_detail::series_color(si)) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    svg += "<text x=\"" + std::to_string(width - mr - 8) + "\" y=\"" +
           std::to_string(mt + 16 + 16 * int(si)) + "\" text-anchor=\"end\" font-size=\"12\" fill=\"" +
           io_detail::series_color(si) + "\">" + series[si].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// Minimal CSV reader for the files this tool writes: numeric columns,
/// one header row. Returns header names + rows of doubles; non-numeric
/// cells (the scheme column) parse as NaN.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::vector<std::string>> cells;
};

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("read_csv: cannot open " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      t.header = fields;
      first = false;
      continue;
    }
    std::vector<double> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      try {
        row[i] = std::stod(fields[i]);
      } catch (...) {
        row[i] = std::numeric_limits<double>::quiet_NaN();
      }
    }
    t.rows.push_back(std::move(row));
    t.cells.push_back(std::move(fields));
  }
  if (first) throw std::invalid_argument("read_csv: empty file " + path);
  return t;
}

}  // namespace bumpforge

#endif
