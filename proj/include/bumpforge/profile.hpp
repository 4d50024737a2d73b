#ifndef BUMPFORGE_PROFILE_HPP
#define BUMPFORGE_PROFILE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bumpforge/moments.hpp"

namespace bumpforge {

/// Even, compactly supported piecewise-linear profile with g'' = mu.
/// Stored through the closed form g(s) = sum_i mu_i * max(s_i - |s|, 0),
/// which is exact, trivially even and free of cumulative-integration
/// drift.
struct ProfileG {
  DiscreteMeasure measure;

  double operator()(double s) const {
    const double z = std::fabs(s);
    double acc = 0.0;
    for (std::size_t i = 0; i < measure.weights.size(); ++i) {
      double t = measure.nodes.points[i] - z;
      if (t > 0.0) acc += measure.weights[i] * t;
    }
    return acc;
  }

  /// One-sided derivative; for z > 0 this is -sum over atoms right of z.
  /// At an atom the value from the right is returned.
  double derivative(double s) const {
    const double z = std::fabs(s);
    double acc = 0.0;
    for (std::size_t i = 0; i < measure.weights.size(); ++i)
      if (measure.nodes.points[i] > z) acc += measure.weights[i];
    return s >= 0.0 ? -acc : acc;
  }
};

inline ProfileG build_g(DiscreteMeasure m) { return ProfileG{std::move(m)}; }

struct QuadConfig {
  int total_points = 1001;  // node budget shared across the smooth pieces
};

/// Radial bump f(x) = integral of g(|x| s) against (1-s^2)^{(d-3)/2},
/// normalized so f(0) = 1.
struct RadialBump {
  int d = 3;
  ProfileG g;
  QuadConfig quad;
};

inline RadialBump radial_bump(int d, ProfileG g, QuadConfig quad = {}) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("radial_bump: d must be odd and >= 3");
  if ((d - 1) / 2 > g.measure.nodes.n + 0)
    throw std::invalid_argument("radial_bump: profile carries too few moment conditions for d");
  if (quad.total_points < 11) throw std::invalid_argument("radial_bump: quadrature budget too small");
  return RadialBump{d, std::move(g), quad};
}

/// f_{m,n}: evaluates the dimension-(m_dim) reduction of a profile built
/// for a larger n. Requires (m_dim-1)/2 <= n; the surplus moment
/// conditions still force f(0) = 1 and f = 0 outside the unit ball, but
/// monotonicity is lost.
inline RadialBump mixed_profile(int m_dim, const ProfileG& g, QuadConfig quad = {}) {
  if (m_dim < 3 || m_dim % 2 == 0)
    throw std::invalid_argument("mixed_profile: dimension must be odd and >= 3");
  if ((m_dim - 1) / 2 > g.measure.nodes.n)
    throw std::invalid_argument("mixed_profile: reduced dimension exceeds available moments");
  return RadialBump{m_dim, g, quad};
}

namespace quad_detail {

inline double powi(double x, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= x;
  return acc;
}

template <class F>
double simpson(F&& f, double a, double b, int m) {
  // m even subintervals
  const double h = (b - a) / double(m);
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < m; i += 2) odd += f(a + double(i) * h);
  for (int i = 2; i < m; i += 2) even += f(a + double(i) * h);
  return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

// Subinterval count for a panel of given length out of a total budget.
inline int panel_subdivisions(double len, int total_points) {
  long m = std::lround(0.5 * double(total_points - 1) * len);
  if (m < 2) m = 2;
  return int(2 * m);
}

// Breakpoints of s -> g(r s) inside (0,1): the kink locations s_i / r.
inline std::vector<double> integrand_breaks(const RadialBump& b, double r) {
  std::vector<double> breaks;
  breaks.push_back(0.0);
  if (r > 0.0)
    for (double s : b.g.measure.nodes.points) {
      double x = s / r;
      if (x > 0.0 && x < 1.0) breaks.push_back(x);
    }
  breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  return breaks;
}

}  // namespace quad_detail

/// f(r) by composite Simpson, panels split at every integrand kink.
/// Numerator and weight normalization use the identical panelization, so
/// f(0) = 1 holds to machine precision and the ratio inherits fourth-order
/// convergence on each smooth piece.
inline double eval_f(const RadialBump& b, double r) {
  const int k = (b.d - 3) / 2;
  auto w = [k](double s) { return quad_detail::powi(1.0 - s * s, k); };
  auto h = [&](double s) { return b.g(r * s) * w(s); };
  const std::vector<double> breaks = quad_detail::integrand_breaks(b, r);
  double num = 0.0, den = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], c = breaks[p + 1];
    const int m = quad_detail::panel_subdivisions(c - a, b.quad.total_points);
    num += quad_detail::simpson(h, a, c, m);
    den += quad_detail::simpson(w, a, c, m);
  }
  return num / den;
}

/// Radial derivative f'(r) = c_d * integral of g'(r s) s (1-s^2)^{(d-3)/2}.
/// g' is constant on each panel, so the panel constant is sampled at the
/// midpoint and only the smooth factor s * w(s) is integrated.
inline double eval_f_prime(const RadialBump& b, double r) {
  const int k = (b.d - 3) / 2;
  if (r <= 0.0) {
    // analytic slope of the segment by the origin:
    // g'(0+) * int s w / int w over [0,1]
    const double i1 = 1.0 / double(b.d - 1);
    const double i0 = 0.5 * std::sqrt(M_PI) *
                      std::exp(std::lgamma(0.5 * double(b.d - 1)) - std::lgamma(0.5 * double(b.d)));
    return b.g.derivative(0.0) * i1 / i0;
  }
  auto w = [k](double s) { return quad_detail::powi(1.0 - s * s, k); };
  const std::vector<double> breaks = quad_detail::integrand_breaks(b, r);
  double num = 0.0, den = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], c = breaks[p + 1];
    const int m = quad_detail::panel_subdivisions(c - a, b.quad.total_points);
    const double slope = b.g.derivative(r * 0.5 * (a + c));
    num += slope * quad_detail::simpson([&](double s) { return s * w(s); }, a, c, m);
    den += quad_detail::simpson(w, a, c, m);
  }
  return num / den;
}

/// Exact d=3 radial profile for the optimal measure (-3, 4, -1).
inline double closed_form_d3(double r) {
  if (r <= 0.5) return 1.0 - 1.5 * r;
  if (r <= 1.0) return 0.5 * r - 1.0 + 0.5 / r;
  return 0.0;
}

namespace quad_detail {

// Breakpoints of r -> f(r) on [0,1]: the measure nodes.
inline std::vector<double> radial_breaks(const RadialBump& b) {
  std::vector<double> breaks;
  breaks.push_back(0.0);
  for (double s : b.g.measure.nodes.points)
    if (s > 0.0 && s < 1.0) breaks.push_back(s);
  breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  return breaks;
}

}  // namespace quad_detail

/// int_0^1 f(r) dr
inline double radial_l1(const RadialBump& b) {
  const std::vector<double> breaks = quad_detail::radial_breaks(b);
  double acc = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], c = breaks[p + 1];
    const int m = quad_detail::panel_subdivisions(c - a, b.quad.total_points);
    acc += quad_detail::simpson([&](double r) { return eval_f(b, r); }, a, c, m);
  }
  return acc;
}

/// d * int_0^1 f(r) r^{d-1} dr — the average of f over the unit ball.
inline double ball_average(const RadialBump& b) {
  const std::vector<double> breaks = quad_detail::radial_breaks(b);
  double acc = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], c = breaks[p + 1];
    const int m = quad_detail::panel_subdivisions(c - a, b.quad.total_points);
    acc += quad_detail::simpson(
        [&](double r) { return eval_f(b, r) * quad_detail::powi(r, b.d - 1); }, a, c, m);
  }
  return double(b.d) * acc;
}

}  // namespace bumpforge

#endif
