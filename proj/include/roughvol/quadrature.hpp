// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "roughvol/errors.hpp"

namespace roughvol {

/// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  static constexpr int order = 16;
  std::array<double, order> nodes{};
  std::array<double, order> weights{};
};

const GaussLegendreRule& gauss_legendre_16();

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_panels = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< sum of panel error estimates
  int panels = 0;
};

/// One 16-point Gauss-Legendre panel over [a, b].
template <class F>
double gauss_legendre_panel(F&& f, double a, double b) {
  const auto& rule = gauss_legendre_16();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < GaussLegendreRule::order; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

/// Globally adaptive composite Gauss-Legendre quadrature.
///
/// Every panel carries two estimates: the 16-point rule over the panel and
/// the sum of the rule over its two halves. The panel with the largest
/// disagreement is halved until the summed disagreement falls below
/// max(abs_tol, rel_tol * |I|) or below the roundoff level of the sum.
/// Algebraic endpoint singularities are handled by local refinement, but
/// callers should remove them by substitution where the cost matters.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    const QuadratureOptions& opt = {}) {
  QuadratureResult result;
  if (a == b) return result;

  struct Panel {
    double a, b;
    double left, right;  // rule over each half
    double error;
  };
  auto make_panel = [&](double lo, double hi, double whole) {
    const double mid = 0.5 * (lo + hi);
    Panel p{lo, hi, gauss_legendre_panel(f, lo, mid),
            gauss_legendre_panel(f, mid, hi), 0.0};
    p.error = std::abs(p.left + p.right - whole);
    return p;
  };
  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };

  std::vector<Panel> heap;
  heap.reserve(64);
  heap.push_back(make_panel(a, b, gauss_legendre_panel(f, a, b)));

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (;;) {
    double value = 0.0, error = 0.0, mass = 0.0;
    for (const auto& p : heap) {
      value += p.left + p.right;
      error += p.error;
      mass += std::abs(p.left) + std::abs(p.right);
    }
    const double target =
        std::max({opt.abs_tol, opt.rel_tol * std::abs(value), 64.0 * eps * mass});
    if (error <= target) {
      result.value = value;
      result.error = error;
      result.panels = static_cast<int>(heap.size());
      return result;
    }
    if (static_cast<int>(heap.size()) >= opt.max_panels ||
        !std::isfinite(value)) {
      throw QuadratureNotConverged(
          "adaptive Gauss-Legendre did not converge on [" + std::to_string(a) +
          ", " + std::to_string(b) + "]: error estimate " +
          std::to_string(error) + " after " + std::to_string(heap.size()) +
          " panels");
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(make_panel(worst.a, mid, worst.left));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(make_panel(mid, worst.b, worst.right));
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
}

}  // namespace roughvol
