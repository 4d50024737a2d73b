#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bumpforge/profile.hpp"
#include "bumpforge/verify.hpp"

using namespace bumpforge;
using Catch::Approx;

namespace {

RadialBump make_bump(int d, double eps = 0.0, int quad = 1001) {
  DiscreteMeasure m = solve_moment_system(nodes_optimal((d - 1) / 2, eps));
  return radial_bump(d, build_g(m), QuadConfig{quad});
}

}  // namespace

TEST_CASE("profile g: closed-form values for the d = 3 measure") {
  ProfileG g = build_g(solve_moment_system(nodes_optimal(1, 0.0)));
  REQUIRE(g(0.0) == Approx(1.0).margin(1e-12));
  REQUIRE(g(0.5) == Approx(-0.5).margin(1e-10));  // 4*0 + (-1)*(1-1/2)
  REQUIRE(g(0.25) == Approx(0.25).margin(1e-10));
  REQUIRE(g(-0.25) == g(0.25));  // even
  REQUIRE(g(1.0) == 0.0);
  REQUIRE(g(1.5) == 0.0);
  REQUIRE(g.derivative(0.25) == Approx(-3.0).margin(1e-9));
  REQUIRE(g.derivative(0.75) == Approx(1.0).margin(1e-9));
}

TEST_CASE("d = 3 bump matches the closed form on a dense grid") {
  RadialBump b = make_bump(3);
  for (int i = 0; i <= 2000; ++i) {
    double r = 2.0 * double(i) / 2000.0;
    REQUIRE(eval_f(b, r) == Approx(closed_form_d3(r)).margin(1e-9));
  }
}

TEST_CASE("d = 3 derivative matches the closed form piecewise") {
  RadialBump b = make_bump(3);
  REQUIRE(eval_f_prime(b, 0.0) == Approx(-1.5).margin(1e-9));
  REQUIRE(eval_f_prime(b, 0.25) == Approx(-1.5).margin(1e-9));
  REQUIRE(eval_f_prime(b, 0.75) == Approx(0.5 - 0.5 / (0.75 * 0.75)).margin(1e-9));
  REQUIRE(eval_f_prime(b, 1.5) == Approx(0.0).margin(1e-12));
}

TEST_CASE("boundary and range invariants for d up to 31") {
  for (int d = 3; d <= 31; d += 4) {
    RadialBump b = make_bump(d);
    REQUIRE(std::fabs(eval_f(b, 0.0) - 1.0) <= 1e-10);
    for (double r : {1.0, 1.1, 1.5, 2.0}) REQUIRE(std::fabs(eval_f(b, r)) <= 1e-6);
    double prev = 1.0;
    for (int i = 1; i <= 2000; ++i) {
      double f = eval_f(b, double(i) / 2000.0);
      REQUIRE(f >= -1e-10);
      REQUIRE(f <= 1.0 + 1e-10);
      REQUIRE(f <= prev + 1e-10);  // non-increasing
      prev = f;
    }
  }
}

TEST_CASE("the bump is affine on [0, s_1] with the analytic slope") {
  for (int d : {3, 7, 15}) {
    RadialBump b = make_bump(d);
    const double s1 = b.g.measure.nodes.points[1];
    const double slope = eval_f_prime(b, 0.0);
    for (int i = 1; i <= 20; ++i) {
      double r = 0.98 * s1 * double(i) / 20.0;
      REQUIRE(eval_f(b, r) == Approx(1.0 + slope * r).margin(1e-9));
    }
  }
}

TEST_CASE("d = 5 origin slope is 3 mu_0 / 8") {
  // int s (1-s^2) ds / int (1-s^2) ds on [0,1] = (1/4)/(2/3) = 3/8
  RadialBump b = make_bump(5);
  REQUIRE(eval_f_prime(b, 0.0) ==
          Approx(b.g.measure.weights[0] * 3.0 / 8.0).margin(1e-10));
}

TEST_CASE("plateau: f is 1 on the inner ball and still vanishes outside") {
  RadialBump b = make_bump(9, 0.5);
  for (int i = 0; i <= 40; ++i)
    REQUIRE(eval_f(b, 0.499 * double(i) / 40.0) == Approx(1.0).margin(1e-9));
  REQUIRE(eval_f_prime(b, 0.0) == Approx(0.0).margin(1e-12));
  REQUIRE(std::fabs(eval_f(b, 1.0)) <= 1e-6);
  REQUIRE(std::fabs(eval_f(b, 1.3)) <= 1e-6);
}

TEST_CASE("dimension reduction: surplus moments keep f(0) = 1 but cost monotonicity") {
  // profile solved for n = 5 evaluated as a 3-dimensional radial function
  ProfileG g = build_g(solve_moment_system(nodes_optimal(5, 0.0)));
  RadialBump b = mixed_profile(3, g);
  REQUIRE(eval_f(b, 0.0) == Approx(1.0).margin(1e-10));
  REQUIRE(std::fabs(eval_f(b, 1.0)) <= 1e-8);
  double lowest = 0.0;
  for (int i = 1; i < 400; ++i) lowest = std::min(lowest, eval_f(b, double(i) / 400.0));
  REQUIRE(lowest < -1e-4);  // undershoots below zero, so not monotone
  REQUIRE_THROWS_AS(mixed_profile(9, build_g(solve_moment_system(nodes_optimal(1, 0.0)))),
                    std::invalid_argument);
}

TEST_CASE("quadrature: doubling the budget moves f by less than 1e-8") {
  for (int d : {3, 11, 31}) {
    RadialBump coarse = make_bump(d, 0.0, 1001);
    RadialBump fine = make_bump(d, 0.0, 2001);
    for (int i = 0; i <= 200; ++i) {
      double r = 1.2 * double(i) / 200.0;
      REQUIRE(std::fabs(eval_f(coarse, r) - eval_f(fine, r)) < 1e-8);
    }
  }
}

TEST_CASE("radial L1 mass of the d = 3 bump is ln(2)/2") {
  // int_0^1 closed_form_d3 = (1 - 3/8/2) pieces -> ln 2 / 2
  REQUIRE(radial_l1(make_bump(3)) == Approx(0.5 * std::log(2.0)).margin(1e-9));
}

TEST_CASE("ball average of the d = 3 bump is 3/32") {
  RadialBump b = make_bump(3);
  REQUIRE(ball_average(b) == Approx(3.0 / 32.0).margin(1e-9));
  // cross-check against a blunt uniform Simpson oracle on [0,1]
  double acc = 0.0;
  const int m = 4000;
  for (int i = 0; i <= m; ++i) {
    double r = double(i) / double(m);
    double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * closed_form_d3(r) * r * r;
  }
  acc *= 3.0 / (3.0 * double(m));
  REQUIRE(ball_average(b) == Approx(acc).margin(1e-7));
}

TEST_CASE("constructor guards") {
  ProfileG g = build_g(solve_moment_system(nodes_optimal(1, 0.0)));
  REQUIRE_THROWS_AS(radial_bump(4, g), std::invalid_argument);
  REQUIRE_THROWS_AS(radial_bump(2, g), std::invalid_argument);
  REQUIRE_THROWS_AS(radial_bump(5, g), std::invalid_argument);  // too few moments
  REQUIRE_THROWS_AS(radial_bump(3, g, QuadConfig{5}), std::invalid_argument);
}

TEST_CASE("invariant suite is clean across schemes and flags injected faults") {
  REQUIRE(verify_bump(5, NodeScheme::Optimal).empty());
  REQUIRE(verify_bump(5, NodeScheme::Equidistant).empty());
  REQUIRE(verify_bump(5, NodeScheme::Chebyshev).empty());
  REQUIRE(verify_bump(7, NodeScheme::Optimal, 0.5).empty());

  DiscreteMeasure m = solve_moment_system(nodes_optimal(2, 0.0));
  m.weights[0] += 1e-5;
  auto fails = verify_measure(m);
  REQUIRE_FALSE(fails.empty());
  REQUIRE(fails.front() == "moments.residual");
}
