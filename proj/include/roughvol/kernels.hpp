// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "roughvol/params.hpp"

namespace roughvol {

/// A covariance function sampled at one lag.
struct KernelValue {
  double lag = 0.0;
  double value = 0.0;
};

/// Small-lag constants of Z^(a) = exp(a (Y - mu)):
/// R_Z(tau) = c0 - c1 tau^{2H} + o(tau^{2H}).
struct AsymptoticConstants {
  double a = 1.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double variance_y = 0.0;
};

/// Stationary variance theta^2 Gamma(2H+1) / (2 lambda^{2H}).
double variance_y(const ModelParams& params);

/// Stationary autocovariance of Y at lag tau >= 0.
///
/// Evaluated from the cosh representation after splitting
/// 2 cosh(lambda (tau - u)) into its two exponentials and folding the
/// growing half into an integral over [tau, inf). The result is algebraically
/// identical to the cosh form but free of the e^{lambda tau} cancellation, so
/// it stays accurate at large lags, where the decay is only ~ tau^{2H-2}.
/// Both remaining integrals are smoothed by v = u^{2H}.
double r_y(const ModelParams& params, double tau);

/// variance_y - r_y(tau), evaluated without cancellation at small lags.
double r_y_decrement(const ModelParams& params, double tau);

/// (variance_y - r_y(tau)) / tau^{2H} for 0 < tau <= 1. Tends to theta^2/2.
double r_y_small_lag_check(const ModelParams& params, double tau);

/// Autocovariance of Z^(a): exp(a^2 var) (exp(a^2 r_y(tau)) - 1).
double r_z(const ModelParams& params, double a, double tau);

/// c0 - r_z(a, tau), evaluated without cancellation.
double r_z_decrement(const ModelParams& params, double a, double tau);

/// (c0 - r_z(a, tau)) / tau^{2H} for 0 < tau <= 1. Tends to c1.
double r_z_small_lag_check(const ModelParams& params, double a, double tau);

AsymptoticConstants asymptotic_constants(const ModelParams& params, double a);

/// G(H) of the Mandelbrot-van Ness representation of fBm.
double mvn_scale(double hurst);

/// E[B_t V_s] under the Mandelbrot-van Ness coupling; zero for t <= 0 and
/// constant in s for s >= t.
double gamma_mvn(double hurst, double t, double s);

/// gamma_mvn(t, s2) - gamma_mvn(t, s1) for s1 <= s2, without cancellation.
double gamma_mvn_increment(double hurst, double t, double s1, double s2);

/// E[(Y_t - mu)(V_{s2} - V_{s1})] for 0 <= s1 < s2. Exactly zero for t <= s1.
double cross_cov_yc_dv(const ModelParams& params, double t, double s1, double s2);

}  // namespace roughvol
