#ifndef BUMPFORGE_MOMENTS_HPP
#define BUMPFORGE_MOMENTS_HPP

#include <cmath>
#include <vector>

#include "bumpforge/double_double.hpp"
#include "bumpforge/errors.hpp"
#include "bumpforge/linear_solve.hpp"
#include "bumpforge/polyapprox.hpp"

namespace bumpforge {

/// Atomic measure mu = sum mu_i delta_{s_i} solving the moment system
///   sum mu_i s_i = 1,   sum mu_i s_i^{2k} = 0  (k = 0..n).
/// gamma is the total variation sum |mu_i|; tv_even doubles it for the
/// even reflection (the origin atom is counted twice, and reflecting
/// doubles every interior atom likewise).
struct DiscreteMeasure {
  NodeSet nodes;
  std::vector<double> weights;
  double gamma = 0.0;
  double tv_even = 0.0;
};

inline DiscreteMeasure make_measure(NodeSet nodes, std::vector<double> weights) {
  DiscreteMeasure m{std::move(nodes), std::move(weights), 0.0, 0.0};
  for (double w : m.weights) m.gamma += std::fabs(w);
  m.tv_even = 2.0 * m.gamma;
  return m;
}

namespace moment_detail {

// Rows of the generalized Vandermonde matrix: (s_i), (1), (s_i^2), ...,
// (s_i^{2n}); right-hand side (1, 0, ..., 0).
inline std::vector<DD> build_matrix(const std::vector<double>& s) {
  const std::size_t m = s.size();  // n + 2
  std::vector<DD> a(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    DD si(s[i]);
    a[0 * m + i] = si;
    DD pw(1.0);
    for (std::size_t row = 1; row < m; ++row) {
      a[row * m + i] = pw;
      pw *= si * si;
    }
  }
  return a;
}

}  // namespace moment_detail

/// Solves V mu = (1, 0, ..., 0)^T in double-double and verifies the
/// residual in the same precision before rounding the weights.
inline DiscreteMeasure solve_moment_system(const NodeSet& nodes) {
  const std::size_t m = nodes.points.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (nodes.points[i + 1] - nodes.points[i] < 1e-14)
      throw SingularSystemError("solve_moment_system: coincident nodes at index " +
                                std::to_string(i));

  std::vector<DD> a = moment_detail::build_matrix(nodes.points);
  std::vector<DD> b(m, DD(0.0));
  b[0] = DD(1.0);
  std::vector<DD> mu = solve_dense(a, b);

  DiscreteMeasure out;
  out.nodes = nodes;
  out.weights.resize(m);
  DD gamma(0.0);
  for (std::size_t i = 0; i < m; ++i) {
    out.weights[i] = to_double(mu[i]);
    gamma += abs(mu[i]);
  }
  out.gamma = to_double(gamma);
  out.tv_even = 2.0 * out.gamma;

  // Extended-precision residual check against the rounded weights.
  a = moment_detail::build_matrix(nodes.points);
  DD worst(0.0);
  for (std::size_t row = 0; row < m; ++row) {
    DD acc(0.0);
    for (std::size_t i = 0; i < m; ++i) acc += a[row * m + i] * DD(out.weights[i]);
    acc -= (row == 0 ? DD(1.0) : DD(0.0));
    if (abs(acc) > worst) worst = abs(acc);
  }
  if (to_double(worst) > 1e-10 * (1.0 + out.gamma))
    throw ConditioningError("solve_moment_system: residual " +
                            std::to_string(to_double(worst)) + " exceeds tolerance");
  return out;
}

inline double gamma_norm(const DiscreteMeasure& m) { return m.gamma; }

/// Moment residuals: entry 0 is sum mu_i s_i - 1, entry k+1 is
/// sum mu_i s_i^{2k} for k = 0..n. Accumulated in double-double.
inline std::vector<double> verify_moments(const DiscreteMeasure& m) {
  const std::size_t cnt = m.weights.size();
  std::vector<double> res(cnt, 0.0);
  {
    DD acc(0.0);
    for (std::size_t i = 0; i < cnt; ++i)
      acc += DD(m.weights[i]) * DD(m.nodes.points[i]);
    res[0] = to_double(acc - DD(1.0));
  }
  for (std::size_t row = 1; row < cnt; ++row) {
    DD acc(0.0);
    for (std::size_t i = 0; i < cnt; ++i) {
      DD si(m.nodes.points[i]);
      DD pw(1.0);
      for (std::size_t k = 1; k < row; ++k) pw *= si * si;
      acc += DD(m.weights[i]) * pw;
    }
    res[row] = to_double(acc);
  }
  return res;
}

}  // namespace bumpforge

#endif
