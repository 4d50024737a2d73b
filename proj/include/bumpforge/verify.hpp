#ifndef BUMPFORGE_VERIFY_HPP
#define BUMPFORGE_VERIFY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "bumpforge/analysis.hpp"
#include "bumpforge/moments.hpp"
#include "bumpforge/polyapprox.hpp"
#include "bumpforge/profile.hpp"

namespace bumpforge {

/// Invariants of a solved measure alone. Returns the names of violated
/// checks; empty means clean.
inline std::vector<std::string> verify_measure(const DiscreteMeasure& m) {
  std::vector<std::string> fails;

  double worst = 0.0;
  for (double r : verify_moments(m)) worst = std::max(worst, std::fabs(r));
  if (worst > 1e-8 * (1.0 + m.gamma)) fails.push_back("moments.residual");

  if (m.nodes.scheme == NodeScheme::Optimal) {
    bool alternates = true;
    for (std::size_t i = 0; i + 1 < m.weights.size(); ++i)
      if (m.weights[i] * m.weights[i + 1] >= 0.0) alternates = false;
    if (!alternates) fails.push_back("moments.alternation");
  }

  double gamma = 0.0;
  for (double w : m.weights) gamma += std::fabs(w);
  if (std::fabs(gamma - m.gamma) > 1e-12 * (1.0 + gamma)) fails.push_back("moments.gamma");
  if (std::fabs(m.tv_even - 2.0 * m.gamma) > 1e-12 * (1.0 + m.tv_even))
    fails.push_back("moments.tv_even");

  return fails;
}

/// Full invariant sweep for one configuration: polynomial level, duality,
/// moment system, profile shape and the analytic envelopes. Returns the
/// names of violated checks; empty means clean.
inline std::vector<std::string> verify_bump(int d, NodeScheme scheme, double eps = 0.0,
                                            QuadConfig quad = {}) {
  std::vector<std::string> fails;
  const int n = (d - 1) / 2;
  const bool optimal = scheme == NodeScheme::Optimal;

  MinimaxPoly mp = remez_sqrt(n, eps * eps);
  {
    // signs of the residual must alternate over the extremals and the
    // level must dominate a dense residual sample (one-sided sandwich)
    bool alt = true;
    double grid_max = 0.0;
    for (std::size_t i = 0; i + 1 < mp.extremals.size(); ++i)
      if (to_double(mp.residual(mp.extremals[i])) *
              to_double(mp.residual(mp.extremals[i + 1])) >=
          0.0)
        alt = false;
    if (!alt) fails.push_back("polyapprox.alternation");
    const double lo2 = eps * eps;
    for (int i = 0; i <= 2000; ++i) {
      double t = lo2 + (1.0 - lo2) * double(i) / 2000.0;
      grid_max = std::max(grid_max, std::fabs(to_double(mp.residual(DD(t)))));
    }
    if (grid_max > to_double(mp.level) * (1.0 + 1e-9)) fails.push_back("polyapprox.level");
  }

  DiscreteMeasure m = solve_moment_system(nodes_for_scheme(scheme, n, eps));
  for (const std::string& f : verify_measure(m)) fails.push_back(f);

  if (optimal && std::fabs(m.gamma * to_double(mp.level) - 1.0) > 1e-8)
    fails.push_back("moments.duality");

  ProfileG g = build_g(m);
  if (std::fabs(g(0.0) - 1.0) > 1e-10) fails.push_back("profile.g_origin");
  if (std::fabs(g(1.0)) > 1e-10 || std::fabs(g(1.5)) > 0.0) fails.push_back("profile.g_support");

  RadialBump bump = radial_bump(d, g, quad);
  if (std::fabs(eval_f(bump, 0.0) - 1.0) > 1e-10) fails.push_back("profile.f_origin");
  for (double r : {1.0, 1.1, 1.5, 2.0})
    if (std::fabs(eval_f(bump, r)) > 1e-9) fails.push_back("profile.f_support");

  {
    bool in_range = true;
    bool monotone = true;
    double prev = eval_f(bump, 0.0);
    const int grid = 2000;
    for (int i = 1; i <= grid; ++i) {
      double f = eval_f(bump, double(i) / double(grid));
      if (f < -1e-9 || f > 1.0 + 1e-9) in_range = false;
      if (f > prev + 1e-9) monotone = false;
      prev = f;
    }
    if (!in_range) fails.push_back("profile.range");
    if (optimal && !monotone) fails.push_back("profile.monotone");
  }

  if (eps > 0.0) {
    bool flat = true;
    for (int i = 0; i <= 50; ++i)
      if (std::fabs(eval_f(bump, eps * 0.999 * double(i) / 50.0) - 1.0) > 1e-6) flat = false;
    if (!flat) fails.push_back("profile.plateau");
    if (m.gamma < plateau_lower_bound(eps, n, 0.5) * (1.0 - 1e-9))
      fails.push_back("analysis.plateau_bound");
  }

  {
    // the bump is linear until the first positive node
    const double s1 = m.nodes.points[eps > 0.0 || m.nodes.points.front() > 0.0 ? 0 : 1];
    if (s1 > 1e-6) {
      const double slope = eval_f_prime(bump, 0.0);
      bool linear = true;
      for (int i = 1; i <= 20; ++i) {
        double r = s1 * 0.98 * double(i) / 20.0;
        if (std::fabs(eval_f(bump, r) - (1.0 + slope * r)) > 1e-7 * (1.0 + std::fabs(slope)))
          linear = false;
      }
      if (!linear) fails.push_back("profile.linear_segment");
    }
  }

  {
    QuadConfig doubled{2 * quad.total_points - 1};
    RadialBump fine = radial_bump(d, bump.g, doubled);
    double diff = 0.0;
    for (int i = 0; i <= 40; ++i) {
      double r = 1.2 * double(i) / 40.0;
      diff = std::max(diff, std::fabs(eval_f(bump, r) - eval_f(fine, r)));
    }
    if (diff > 1e-8) fails.push_back("profile.quad_stability");
  }

  {
    const double bound = lipschitz_bound(d, m.tv_even);
    double max_slope = 0.0;
    for (int i = 0; i < 1000; ++i)
      max_slope = std::max(max_slope,
                           std::fabs(eval_f_prime(bump, (double(i) + 0.5) / 1000.0)));
    if (max_slope > bound * (1.0 + 1e-6)) fails.push_back("analysis.lipschitz");
  }

  if (optimal && eps == 0.0 && d >= 5) {
    bool decays = true;
    for (int i = 0; i <= 30; ++i) {
      double r = 0.65 + 0.3 * double(i) / 30.0;
      if (eval_f(bump, r) > decay_bound(d, m.gamma, r) + 1e-9) decays = false;
    }
    if (!decays) fails.push_back("analysis.decay");
  }

  return fails;
}

}  // namespace bumpforge

#endif
