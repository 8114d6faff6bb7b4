#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "revolve/quadrature.hpp"

using namespace revolve;

TEST_CASE("integrate closed forms") {
  auto sq = [](double t) { return t * t; };
  QuadratureResult r = integrate(sq, 0.0, 1.0);
  CHECK(std::fabs(r.value - 1.0 / 3.0) <= 1e-12);
  CHECK(r.evaluations >= 15);
  CHECK(r.error_estimate >= 0.0);

  r = integrate([](double t) { return std::sin(t); }, 0.0, std::numbers::pi);
  CHECK(std::fabs(r.value - 2.0) <= 1e-12);
}

TEST_CASE("splitting a kink by hand costs fewer evaluations") {
  auto kink = [](double t) { return std::fabs(t - 0.5); };
  const QuadratureResult whole = integrate(kink, 0.0, 1.0);
  CHECK(std::fabs(whole.value - 0.25) <= 1e-12);
  const QuadratureResult left = integrate(kink, 0.0, 0.5);
  const QuadratureResult right = integrate(kink, 0.5, 1.0);
  CHECK(std::fabs(left.value + right.value - 0.25) <= 1e-13);
  CHECK(whole.evaluations > left.evaluations + right.evaluations);
}

TEST_CASE("base rule integrates polynomials of degree >= 10 exactly") {
  // single panel: degree-10 polynomial with nonuniform coefficients
  auto p = [](double t) {
    double acc = 0.0, pw = 1.0;
    for (int k = 0; k <= 10; ++k) {
      acc += (k % 2 ? -1.0 : 1.0) * (k + 1) * pw;
      pw *= t;
    }
    return acc;
  };
  // antiderivative evaluated exactly
  auto P = [](double t) {
    double acc = 0.0, pw = t;
    for (int k = 0; k <= 10; ++k) {
      acc += (k % 2 ? -1.0 : 1.0) * (k + 1) * pw / (k + 1);
      pw *= t;
    }
    return acc;
  };
  const double exact = P(2.0) - P(-1.0);
  const QuadratureResult r = integrate(p, -1.0, 2.0, 1e-10, 1e-12);
  CHECK(std::fabs(r.value - exact) <= 1e-13 * std::fabs(exact));
}

TEST_CASE("linearity over random polynomials") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double c3 = coef(rng), c2 = coef(rng), c1 = coef(rng);
    const double d2 = coef(rng), d0 = coef(rng);
    const double alpha = coef(rng), beta = coef(rng);
    auto f = [&](double t) { return c3 * t * t * t + c2 * t * t + c1 * t; };
    auto g = [&](double t) { return d2 * t * t + d0; };
    auto combo = [&](double t) { return alpha * f(t) + beta * g(t); };
    const double lhs = integrate(combo, -1.0, 2.0).value;
    const double rhs = alpha * integrate(f, -1.0, 2.0).value +
                       beta * integrate(g, -1.0, 2.0).value;
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * (1.0 + std::fabs(lhs)));
  }
}

TEST_CASE("interval additivity") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> mid(0.05, 0.95);
  auto f = [](double t) { return std::exp(-t) * std::cos(5.0 * t); };
  const double whole = integrate(f, 0.0, 1.0).value;
  for (int i = 0; i < 20; ++i) {
    const double m = mid(rng);
    const double split = integrate(f, 0.0, m).value + integrate(f, m, 1.0).value;
    CHECK(std::fabs(whole - split) <= 2e-10 * (1.0 + std::fabs(whole)));
  }
}

TEST_CASE("MaxSubdivisions on a singular integrand") {
  auto singular = [](double t) { return std::pow(t, -0.75); };
  CHECK_THROWS_AS(integrate(singular, 0.0, 1.0, 1e-10, 1e-12), MaxSubdivisions);
}

TEST_CASE("find_sign_changes locates single and multiple crossings") {
  auto roots = find_sign_changes([](double t) { return t; }, -1.0, 1.0, 1024);
  REQUIRE(roots.size() == 1);
  CHECK(std::fabs(roots[0]) <= 1e-12);

  roots = find_sign_changes([](double t) { return std::cos(t); }, 0.0,
                            2.0 * std::numbers::pi, 1024);
  REQUIRE(roots.size() == 2);
  CHECK(std::fabs(roots[0] - std::numbers::pi / 2.0) <= 1e-12);
  CHECK(std::fabs(roots[1] - 3.0 * std::numbers::pi / 2.0) <= 1e-12);
}

TEST_CASE("tangential zeros are not sign changes") {
  auto roots = find_sign_changes([](double t) { return t * t; }, -1.0, 1.0, 1024);
  CHECK(roots.empty());
}

TEST_CASE("reported roots bracket an actual sign change") {
  auto g = [](double t) { return std::sin(3.0 * t) - 0.3; };
  const double a = -2.0, b = 2.0;
  auto roots = find_sign_changes(g, a, b, 1024);
  CHECK(!roots.empty());
  double prev = a;
  for (double r : roots) {
    CHECK(r > prev);
    CHECK(r > a);
    CHECK(r < b);
    const double w = 1e-10;
    CHECK(g(r - w) * g(r + w) < 0.0);
    prev = r;
  }
}
