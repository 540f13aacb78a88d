// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/params.hpp"

#include <cmath>
#include <string>

#include "roughvol/errors.hpp"

namespace roughvol {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

}  // namespace

void validate(const ModelParams& p) {
  // Negated comparisons so NaN fails every check.
  require(p.hurst > 0.0 && p.hurst < 0.5,
          "hurst must satisfy 0 < hurst < 1/2 (got " + std::to_string(p.hurst) + ")");
  require(p.lambda > 0.0 && std::isfinite(p.lambda),
          "lambda must be > 0 (got " + std::to_string(p.lambda) + ")");
  require(p.theta > 0.0 && std::isfinite(p.theta),
          "theta must be > 0 (got " + std::to_string(p.theta) + ")");
  require(std::isfinite(p.mu), "mu must be finite");
  require(p.rho > -1.0 && p.rho < 1.0,
          "rho must satisfy -1 < rho < 1 (got " + std::to_string(p.rho) + ")");
  require(p.s0 > 0.0 && std::isfinite(p.s0),
          "s0 must be > 0 (got " + std::to_string(p.s0) + ")");
  require(p.t_final > 0.0 && std::isfinite(p.t_final),
          "t_final must be > 0 (got " + std::to_string(p.t_final) + ")");
}

}  // namespace roughvol
