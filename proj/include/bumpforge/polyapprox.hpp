#ifndef BUMPFORGE_POLYAPPROX_HPP
#define BUMPFORGE_POLYAPPROX_HPP

#include <cmath>
#include <string>
#include <vector>

#include "bumpforge/double_double.hpp"
#include "bumpforge/errors.hpp"
#include "bumpforge/linear_solve.hpp"

namespace bumpforge {

/// Best uniform polynomial approximant of sqrt(t) on [lo, 1].
///
/// Holds the degree-n coefficients, the equioscillation level e > 0 and
/// the n+2 extremal abscissae lo = t_0 < ... < t_{n+1} = 1 at which the
/// residual sqrt(t) - p(t) attains +-e with strictly alternating signs.
/// Coefficients are kept in double-double form: the monomial basis is so
/// ill-conditioned near n = 15 that double-rounded coefficients would
/// corrupt the residual by more than the equioscillation band.
struct MinimaxPoly {
  int degree = 0;
  double lo = 0.0;
  std::vector<DD> coeffs;     // alpha_0 .. alpha_n
  DD level;                   // e > 0
  std::vector<DD> extremals;  // t_0 .. t_{n+1}

  DD poly(DD t) const {
    DD acc = coeffs.back();
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * t + coeffs[j];
    return acc;
  }

  DD poly_deriv(DD t) const {
    if (coeffs.size() < 2) return DD(0.0);
    DD acc = coeffs.back() * DD(double(coeffs.size() - 1));
    for (std::size_t j = coeffs.size() - 1; j-- > 1;)
      acc = acc * t + coeffs[j] * DD(double(j));
    return acc;
  }

  /// r(t) = sqrt(t) - p(t)
  DD residual(DD t) const { return sqrt(t) - poly(t); }

  /// r'(t) = 1/(2 sqrt(t)) - p'(t); only queried at t > 0.
  DD residual_deriv(DD t) const { return DD(1.0) / (DD(2.0) * sqrt(t)) - poly_deriv(t); }

  std::vector<double> coeffs_double() const {
    std::vector<double> out(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) out[j] = to_double(coeffs[j]);
    return out;
  }

  std::vector<double> extremals_double() const {
    std::vector<double> out(extremals.size());
    for (std::size_t j = 0; j < extremals.size(); ++j) out[j] = to_double(extremals[j]);
    return out;
  }
};

struct RemezOptions {
  int max_iterations = 100;
  double ratio_tol = 1.001;     // termination: max|r(t_i)| / min|r(t_i)|
  double bisect_width = 1e-13;  // all bisections stop at this interval width
};

namespace remez_detail {

// Levelled reference solve: alpha_0..alpha_n and e such that
// p(t_i) + (-1)^i e = sqrt(t_i) for all reference points.
inline void solve_reference(const std::vector<DD>& ref, int n, std::vector<DD>& coeffs,
                            DD& e) {
  const std::size_t m = ref.size();  // n + 2
  std::vector<DD> a(m * m), b(m);
  for (std::size_t i = 0; i < m; ++i) {
    DD pw(1.0);
    for (int j = 0; j <= n; ++j) {
      a[i * m + j] = pw;
      pw *= ref[i];
    }
    a[i * m + (m - 1)] = DD(i % 2 == 0 ? 1.0 : -1.0);
    b[i] = sqrt(ref[i]);
  }
  std::vector<DD> x = solve_dense(std::move(a), std::move(b));
  coeffs.assign(x.begin(), x.begin() + (n + 1));
  e = x[n + 1];
}

// Bisect for a sign change of f on (a, b); f(a) and f(b) must differ in sign.
template <class F>
DD bisect(F&& f, DD a, DD b, double width, const char* what) {
  DD fa = f(a);
  DD fb = f(b);
  const bool neg_a = fa < DD(0.0);
  const bool neg_b = fb < DD(0.0);
  if (neg_a == neg_b)
    throw RemezError(std::string("remez_sqrt: lost sign change while locating ") + what);
  while (to_double(b - a) > width) {
    DD mid = (a + b) * DD(0.5);
    DD fm = f(mid);
    if (fm == DD(0.0)) return mid;
    if ((fm < DD(0.0)) == neg_a)
      a = mid;
    else
      b = mid;
  }
  return (a + b) * DD(0.5);
}

}  // namespace remez_detail

/// Remez exchange for sqrt(t) on [lo, 1].
///
/// The reference starts equidistant with endpoints pinned. Each pass
/// solves the levelled system, then relocates the n interior extremals by
/// two nested bisections: first the n+1 roots of the residual between
/// consecutive reference points, then the roots of the residual
/// derivative between consecutive residual roots. Terminates once the
/// residual magnitudes over the updated reference agree to the ratio
/// tolerance, followed by one final levelling solve on that reference.
inline MinimaxPoly remez_sqrt(int n, double lo, RemezOptions opt = {}) {
  if (n < 0) throw std::invalid_argument("remez_sqrt: n must be >= 0");
  if (lo < 0.0 || lo >= 1.0) throw std::invalid_argument("remez_sqrt: lo must be in [0,1)");

  const std::size_t m = std::size_t(n) + 2;
  std::vector<DD> ref(m);
  for (std::size_t i = 0; i < m; ++i)
    ref[i] = DD(lo) + DD(1.0 - lo) * (DD(double(i)) / DD(double(m - 1)));
  ref.front() = DD(lo);
  ref.back() = DD(1.0);

  MinimaxPoly out;
  out.degree = n;
  out.lo = lo;

  DD e;
  for (int it = 0; it < opt.max_iterations; ++it) {
    remez_detail::solve_reference(ref, n, out.coeffs, e);
    if (n == 0) {
      out.level = abs(e);
      out.extremals = ref;
      return out;
    }

    // Roots of the residual between consecutive reference points. The
    // residual equals (-1)^i e at the reference, so each gap brackets one.
    auto r = [&out](DD t) { return out.residual(t); };
    std::vector<DD> roots(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i)
      roots[i] = remez_detail::bisect(r, ref[i], ref[i + 1], opt.bisect_width,
                                      "a residual root");

    // Interior extremals between consecutive roots; endpoints stay pinned.
    // (sqrt is not differentiable at 0, so the leftmost extremal is never
    // located by derivative bisection.)
    auto rp = [&out](DD t) { return out.residual_deriv(t); };
    std::vector<DD> next(m);
    next.front() = DD(lo);
    next.back() = DD(1.0);
    for (std::size_t i = 1; i + 1 < m; ++i)
      next[i] = remez_detail::bisect(rp, roots[i - 1], roots[i], opt.bisect_width,
                                     "an extremal");

    DD rmax(0.0), rmin = abs(out.residual(next[0]));
    rmax = rmin;
    for (std::size_t i = 1; i < m; ++i) {
      DD mag = abs(out.residual(next[i]));
      if (mag > rmax) rmax = mag;
      if (mag < rmin) rmin = mag;
    }
    ref = std::move(next);
    if (to_double(rmin) > 0.0 && to_double(rmax) / to_double(rmin) < opt.ratio_tol) {
      remez_detail::solve_reference(ref, n, out.coeffs, e);
      out.level = abs(e);
      out.extremals = ref;
      return out;
    }
  }
  throw RemezError("remez_sqrt: equioscillation ratio not reached within " +
                   std::to_string(opt.max_iterations) + " iterations (n=" +
                   std::to_string(n) + ", lo=" + std::to_string(lo) + ")");
}

enum class NodeScheme { Optimal, Equidistant, Chebyshev };

inline const char* scheme_name(NodeScheme s) {
  switch (s) {
    case NodeScheme::Optimal: return "optimal";
    case NodeScheme::Equidistant: return "equidistant";
    case NodeScheme::Chebyshev: return "chebyshev";
  }
  return "?";
}

/// Break points 0 <= s_0 < ... < s_{n+1} <= 1 for the moment system.
struct NodeSet {
  int n = 0;
  NodeScheme scheme = NodeScheme::Optimal;
  double lo = 0.0;  // left endpoint for Optimal / Equidistant
  std::vector<double> points;
};

/// s_i = sqrt(t_i) for the extremals t_i of remez_sqrt(n, lo^2). The
/// substitution is t = s^2: extremals of the sqrt problem map to optimal
/// even-polynomial break points by the square root, as the d=3 case
/// (0, 1/4, 1) -> (0, 1/2, 1) fixes.
inline NodeSet nodes_optimal(int n, double lo) {
  MinimaxPoly mp = remez_sqrt(n, lo * lo);
  NodeSet ns{n, NodeScheme::Optimal, lo, {}};
  ns.points.resize(mp.extremals.size());
  for (std::size_t i = 0; i < mp.extremals.size(); ++i)
    ns.points[i] = to_double(sqrt(mp.extremals[i]));
  ns.points.front() = lo;
  ns.points.back() = 1.0;
  return ns;
}

/// s_i = lo + (1 - lo) * i / (n + 1)
inline NodeSet nodes_equidistant(int n, double lo) {
  if (n < 0) throw std::invalid_argument("nodes_equidistant: n must be >= 0");
  if (lo < 0.0 || lo >= 1.0)
    throw std::invalid_argument("nodes_equidistant: lo must be in [0,1)");
  NodeSet ns{n, NodeScheme::Equidistant, lo, {}};
  ns.points.resize(std::size_t(n) + 2);
  for (int i = 0; i <= n + 1; ++i)
    ns.points[i] = lo + (1.0 - lo) * double(i) / double(n + 1);
  ns.points.back() = 1.0;
  return ns;
}

/// s_i = 1/2 + cos(i pi / (n+1)) / 2, reordered increasing.
inline NodeSet nodes_chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("nodes_chebyshev: n must be >= 0");
  NodeSet ns{n, NodeScheme::Chebyshev, 0.0, {}};
  ns.points.resize(std::size_t(n) + 2);
  for (int i = 0; i <= n + 1; ++i)
    ns.points[n + 1 - i] = 0.5 + 0.5 * std::cos(double(i) * M_PI / double(n + 1));
  ns.points.front() = 0.0;
  ns.points.back() = 1.0;
  return ns;
}

}  // namespace bumpforge

#endif
