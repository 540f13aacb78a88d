// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "roughvol/errors.hpp"
#include "roughvol/quadrature.hpp"

using namespace roughvol;

TEST_CASE("gauss-legendre rule is symmetric and weights sum to 2") {
  const auto& rule = gauss_legendre_16();
  double total = 0.0;
  for (int i = 0; i < GaussLegendreRule::order; ++i) {
    total += rule.weights[i];
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[GaussLegendreRule::order - 1 - i]).epsilon(1e-15));
    CHECK(rule.weights[i] > 0.0);
  }
  CHECK(total == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("single panel is exact for polynomials up to degree 31") {
  for (int deg : {0, 1, 7, 20, 31}) {
    const double got = gauss_legendre_panel([deg](double x) { return std::pow(x, deg); }, 0.0, 1.0);
    CHECK(got == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-14));
  }
}

TEST_CASE("adaptive integration of smooth and endpoint-singular integrands") {
  auto r1 = integrate_adaptive([](double x) { return std::exp(-x) * std::cos(3.0 * x); }, 0.0, 5.0);
  const double exact1 = (1.0 - std::exp(-5.0) * (std::cos(15.0) - 3.0 * std::sin(15.0))) / 10.0;
  CHECK(r1.value == doctest::Approx(exact1).epsilon(1e-13));

  // x^{-1/2} on (0,1]: the rule never touches the endpoint.
  auto r2 = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                               {1e-12, 0.0, 10000});
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-11));

  auto r3 = integrate_adaptive([](double x) { return std::pow(x, -0.8); }, 0.0, 1.0,
                               {1e-10, 0.0, 10000});
  CHECK(r3.value == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("empty and reversed intervals") {
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
  CHECK(integrate_adaptive([](double x) { return x; }, 1.0, 0.0).value ==
        doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("non-convergence is reported, not silently truncated") {
  auto wild = [](double x) { return std::sin(1.0 / x) / x; };
  CHECK_THROWS_AS(integrate_adaptive(wild, 1e-9, 1.0, {1e-14, 0.0, 8}), QuadratureNotConverged);
  try {
    integrate_adaptive(wild, 1e-9, 1.0, {1e-14, 0.0, 8});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::quadrature_not_converged);
  }
}
