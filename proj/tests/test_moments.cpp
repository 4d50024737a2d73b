#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "bumpforge/moments.hpp"

using namespace bumpforge;
using Catch::Approx;

TEST_CASE("n = 1 optimal weights are (-3, 4, -1) on (0, 1/2, 1)") {
  DiscreteMeasure m = solve_moment_system(nodes_optimal(1, 0.0));
  REQUIRE(m.weights[0] == Approx(-3.0).margin(1e-9));
  REQUIRE(m.weights[1] == Approx(4.0).margin(1e-9));
  REQUIRE(m.weights[2] == Approx(-1.0).margin(1e-9));
  REQUIRE(m.gamma == Approx(8.0).margin(1e-9));
  REQUIRE(m.tv_even == Approx(16.0).margin(1e-9));
}

TEST_CASE("moment residuals stay below 1e-8 * gamma up to n = 15") {
  for (int n = 0; n <= 15; ++n) {
    DiscreteMeasure m = solve_moment_system(nodes_optimal(n, 0.0));
    for (double r : verify_moments(m)) REQUIRE(std::fabs(r) <= 1e-8 * m.gamma);
  }
}

TEST_CASE("optimal weights alternate in sign, starting negative") {
  for (int n = 0; n <= 15; ++n) {
    DiscreteMeasure m = solve_moment_system(nodes_optimal(n, 0.0));
    for (std::size_t i = 0; i < m.weights.size(); ++i) {
      REQUIRE(m.weights[i] != 0.0);
      REQUIRE(std::signbit(m.weights[i]) == (i % 2 == 0));
    }
  }
}

TEST_CASE("duality: gamma times the approximation level equals 1") {
  for (int n = 0; n <= 15; ++n) {
    double gamma = solve_moment_system(nodes_optimal(n, 0.0)).gamma;
    double level = to_double(remez_sqrt(n, 0.0).level);
    REQUIRE(gamma * level == Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("optimal nodes minimize gamma; chebyshev overtakes equidistant eventually") {
  for (int n : {2, 5, 9, 15}) {
    double g_op = solve_moment_system(nodes_optimal(n, 0.0)).gamma;
    double g_eq = solve_moment_system(nodes_equidistant(n, 0.0)).gamma;
    double g_ch = solve_moment_system(nodes_chebyshev(n)).gamma;
    REQUIRE(g_op <= g_eq * (1.0 + 1e-12));
    REQUIRE(g_op <= g_ch * (1.0 + 1e-12));
    // the orderings of the suboptimal schemes cross: chebyshev is slightly
    // cheaper at small n but grows with a larger exponent
    if (n >= 9) REQUIRE(g_eq <= g_ch);
  }
}

TEST_CASE("any admissible node set pays at least 1/level") {
  // gamma >= 1/e_n for every choice of nodes; equality only at the optimum
  std::mt19937 rng(20240817);
  for (int n : {2, 4, 6}) {
    const double floor = 1.0 / to_double(remez_sqrt(n, 0.0).level);
    for (int trial = 0; trial < 20; ++trial) {
      NodeSet ns{n, NodeScheme::Equidistant, 0.0, {}};
      ns.points.resize(std::size_t(n) + 2);
      std::uniform_real_distribution<double> u(0.01, 0.99);
      ns.points.front() = 0.0;
      ns.points.back() = 1.0;
      for (int i = 1; i <= n; ++i) ns.points[i] = u(rng);
      std::sort(ns.points.begin(), ns.points.end());
      bool separated = true;
      for (int i = 0; i <= n; ++i)
        if (ns.points[i + 1] - ns.points[i] < 1e-3) separated = false;
      if (!separated) continue;
      REQUIRE(solve_moment_system(ns).gamma >= floor * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("coincident nodes are rejected") {
  NodeSet ns{1, NodeScheme::Equidistant, 0.0, {0.0, 0.5, 0.5 + 1e-16}};
  REQUIRE_THROWS_AS(solve_moment_system(ns), SingularSystemError);
}

TEST_CASE("verify_moments flags a corrupted weight") {
  DiscreteMeasure m = solve_moment_system(nodes_optimal(3, 0.0));
  m.weights[1] += 1e-4;
  double worst = 0.0;
  for (double r : verify_moments(m)) worst = std::max(worst, std::fabs(r));
  REQUIRE(worst > 1e-8 * m.gamma);
}

TEST_CASE("plateau measures grow exponentially in n") {
  double prev = 0.0;
  for (int n = 3; n <= 8; ++n) {
    double g = solve_moment_system(nodes_optimal(n, 0.5)).gamma;
    if (n >= 6) REQUIRE(g / prev >= 1.0 / 0.75 - 0.1);
    prev = g;
  }
}
