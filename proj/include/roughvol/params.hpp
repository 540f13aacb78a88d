// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace roughvol {

/// Parameters of the log-price / fractional OU log-volatility model.
///
/// The log-volatility Y is the stationary solution of
/// dY = lambda (mu - Y) dt + theta dB with B a fractional Brownian motion of
/// Hurst index `hurst` < 1/2; the log-price X is driven by exp(Y) through two
/// independent Brownian motions V (correlated with B) and W.
struct ModelParams {
  double hurst = 0.25;
  double lambda = 1.0;  ///< mean-reversion rate, 1/time
  double theta = 1.0;   ///< vol-of-vol
  double mu = 0.0;      ///< long-run mean of Y
  double rho = 0.0;     ///< leverage correlation weight on dV
  double s0 = 1.0;
  double t_final = 1.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Throws ValidationError naming the first violated bound.
void validate(const ModelParams& params);

}  // namespace roughvol
