#ifndef BUMPFORGE_ANALYSIS_HPP
#define BUMPFORGE_ANALYSIS_HPP

#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bumpforge/moments.hpp"
#include "bumpforge/polyapprox.hpp"
#include "bumpforge/profile.hpp"

namespace bumpforge {

/// Sphere-area quotient |S^{d-2}|/|S^{d-1}| = 1 / int_{-1}^1 (1-s^2)^{(d-3)/2} ds
/// = Gamma(d/2) / (sqrt(pi) Gamma((d-1)/2)), evaluated in log space.
inline double c_d(int d) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("c_d: d must be odd and >= 3");
  return std::exp(std::lgamma(0.5 * double(d)) - std::lgamma(0.5 * double(d - 1))) /
         std::sqrt(M_PI);
}

/// Lipschitz bound per unit of even-reflected total variation:
/// tv_even * Gamma(d/2) / (sqrt(pi) (d-1) Gamma((d-1)/2)).
inline double lipschitz_bound(int d, double tv_even) {
  return tv_even * c_d(d) / double(d - 1);
}

/// Pointwise decay envelope (2 c_d gamma / r) * ((1-r^2)/r)^{(d-3)/2},
/// valid on 0 < r < 1 and exponentially small in d once r > 0.62.
inline double decay_bound(int d, double gamma_half, double r) {
  if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("decay_bound: r must be in (0,1)");
  return 2.0 * c_d(d) * gamma_half / r *
         quad_detail::powi((1.0 - r * r) / r, (d - 3) / 2);
}

/// Exponential lower bound c * eps^2 sqrt(pi n) / (1 - eps^2)^{n+1} on the
/// total variation of any plateau measure on [eps, 1].
inline double plateau_lower_bound(double eps, int n, double c) {
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("plateau_lower_bound: eps in (0,1)");
  if (c <= 0.0 || c > 1.0) throw std::invalid_argument("plateau_lower_bound: c in (0,1]");
  return c * eps * eps * std::sqrt(M_PI * double(n)) /
         std::pow(1.0 - eps * eps, double(n + 1));
}

/// Norm of the inner layer in the two-hidden-layer representation of the
/// plateau target: (d-1) / (c_d (1-eps)), asymptotically sqrt(2 pi d)/(1-eps).
inline double depth_sep_norm(int d, double eps) {
  if (eps < 0.0 || eps >= 1.0) throw std::invalid_argument("depth_sep_norm: eps in [0,1)");
  return double(d - 1) / (c_d(d) * (1.0 - eps));
}

struct DataPoint {
  std::vector<double> x;
  double y = 0.0;
};

/// Barron-norm bound 2 gamma_{(d+1)/2} sum |y_i| / r_i for interpolating a
/// finite data set by scaled bump copies; r_i is the distance to the
/// nearest other data point.
inline double fit_dataset_bound(const std::vector<DataPoint>& points, int d,
                                int gamma_index = -1) {
  if (points.size() < 2) throw std::invalid_argument("fit_dataset_bound: need >= 2 points");
  if (gamma_index < 0) {
    if (d % 2 == 0)
      throw std::invalid_argument("fit_dataset_bound: pass gamma_index explicitly for even d");
    gamma_index = (d + 1) / 2;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double ri2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      double acc = 0.0;
      for (std::size_t k = 0; k < points[i].x.size(); ++k) {
        double diff = points[i].x[k] - points[j].x[k];
        acc += diff * diff;
      }
      ri2 = std::min(ri2, acc);
    }
    if (ri2 == 0.0)
      throw std::invalid_argument("fit_dataset_bound: duplicate data point at index " +
                                  std::to_string(i));
    sum += std::fabs(points[i].y) / std::sqrt(ri2);
  }
  double gamma = gamma_norm(solve_moment_system(nodes_optimal(gamma_index, 0.0)));
  return 2.0 * gamma * sum;
}

struct MollificationRate {
  double eps_star = 1.0;
  double rate = 1.0;
};

/// Optimal mollification width eps ~ m^{-1/(2(d+1+alpha))} and the
/// resulting approximation rate m^{-alpha/(2(d+1+alpha))}.
inline MollificationRate mollification_rate(int d, double alpha, long m) {
  if (alpha <= 0.0 || m < 1) throw std::invalid_argument("mollification_rate: alpha > 0, m >= 1");
  const double denom = 2.0 * (double(d) + 1.0 + alpha);
  return {std::pow(double(m), -1.0 / denom), std::pow(double(m), -alpha / denom)};
}

struct PowerLawFit {
  double coeff = 0.0;
  double exponent = 0.0;
};

struct ExpLawFit {
  double intercept = 0.0;
  double slope = 0.0;
};

namespace fit_detail {

// Least squares line b0 + b1 * x.
inline std::pair<double, double> line_fit(const std::vector<double>& xs,
                                          const std::vector<double>& ys) {
  const double n = double(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double b1 = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double b0 = (sy - b1 * sx) / n;
  return {b0, b1};
}

}  // namespace fit_detail

/// Least squares in log-log coordinates: y ~ coeff * x^exponent.
inline PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_power_law: need >= 2 matching samples");
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      throw std::invalid_argument("fit_power_law: inputs must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  auto [b0, b1] = fit_detail::line_fit(lx, ly);
  return {std::exp(b0), b1};
}

/// Least squares of log y against x: y ~ exp(intercept + slope * x).
inline ExpLawFit fit_exp_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_exp_law: need >= 2 matching samples");
  std::vector<double> ly(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] <= 0.0) throw std::invalid_argument("fit_exp_law: ys must be positive");
    ly[i] = std::log(ys[i]);
  }
  auto [b0, b1] = fit_detail::line_fit(xs, ly);
  return {b0, b1};
}

struct SweepRecord {
  int d = 0;
  NodeScheme scheme = NodeScheme::Optimal;
  double gamma = 0.0;
  double gamma_over_d = 0.0;
  double remez_level = 0.0;
  double lipschitz_bound = 0.0;
  double max_abs_fprime = 0.0;
  double radial_l1 = 0.0;
  double ball_avg = 0.0;
};

inline NodeSet nodes_for_scheme(NodeScheme scheme, int n, double eps) {
  switch (scheme) {
    case NodeScheme::Optimal: return nodes_optimal(n, eps);
    case NodeScheme::Equidistant: return nodes_equidistant(n, eps);
    case NodeScheme::Chebyshev:
      if (eps != 0.0)
        throw std::invalid_argument("nodes_for_scheme: chebyshev has no plateau variant");
      return nodes_chebyshev(n);
  }
  throw std::invalid_argument("nodes_for_scheme: unknown scheme");
}

inline SweepRecord sweep_one(int d, NodeScheme scheme, double eps = 0.0, QuadConfig quad = {}) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("sweep_one: d must be odd and >= 3");
  const int n = (d - 1) / 2;
  SweepRecord rec;
  rec.d = d;
  rec.scheme = scheme;
  rec.remez_level = to_double(remez_sqrt(n, eps * eps).level);
  DiscreteMeasure m = solve_moment_system(nodes_for_scheme(scheme, n, eps));
  rec.gamma = m.gamma;
  rec.gamma_over_d = m.gamma / double(d);
  rec.lipschitz_bound = lipschitz_bound(d, m.tv_even);
  RadialBump bump = radial_bump(d, build_g(m), quad);
  const int samples = 2001;
  for (int i = 0; i < samples; ++i) {
    double r = (double(i) + 0.5) / double(samples);
    rec.max_abs_fprime = std::max(rec.max_abs_fprime, std::fabs(eval_f_prime(bump, r)));
  }
  rec.radial_l1 = radial_l1(bump);
  rec.ball_avg = ball_average(bump);
  return rec;
}

inline int sweep_thread_cap() {
  if (const char* env = std::getenv("BUMPFORGE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

/// One record per dimension; work is farmed out across threads (capped by
/// BUMPFORGE_THREADS) and merged in dimension order.
inline std::vector<SweepRecord> run_sweep(const std::vector<int>& dims, NodeScheme scheme,
                                          double eps = 0.0, QuadConfig quad = {}) {
  std::vector<SweepRecord> out(dims.size());
  if (dims.empty()) return out;
  const int threads = std::min<int>(sweep_thread_cap(), int(dims.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < dims.size(); ++i) out[i] = sweep_one(dims[i], scheme, eps, quad);
    return out;
  }
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = std::size_t(t); i < dims.size(); i += std::size_t(threads)) {
        try {
          out[i] = sweep_one(dims[i], scheme, eps, quad);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace bumpforge

#endif
