// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "roughvol/grid.hpp"
#include "roughvol/params.hpp"

namespace roughvol {

enum class Scheme { euler, trapezoid };

const char* to_string(Scheme scheme) noexcept;

/// Approximation of X_T split into its three sums.
/// value == riemann_part + dv_part + dw_part, assembled once.
struct SchemeResult {
  double value = 0.0;
  double riemann_part = 0.0;
  double dv_part = 0.0;
  double dw_part = 0.0;
  Scheme scheme = Scheme::euler;
  int grid_n = 0;
};

/// Left-endpoint Euler approximation of X_T.
SchemeResult euler(const JointPath& path, const ModelParams& params);

/// Trapezoidal rule for the ds and dW sums; the dV sum stays left-endpoint.
SchemeResult trapezoid(const JointPath& path, const ModelParams& params);

/// S = s0 exp(x).
double price_from_logprice(double x, const ModelParams& params);

}  // namespace roughvol
