// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "roughvol/execution.hpp"
#include "roughvol/params.hpp"

namespace roughvol {

/// Leading constants of the mean-square errors, all multiplying n^{-2H}.
struct TheoryConstants {
  double c_euler = 0.0;
  double c_trapezoid = 0.0;
  double lower_bound = 0.0;  ///< for any method using the same grid information
  double hurst = 0.0;
};

TheoryConstants theory_constants(const ModelParams& params);

/// u -> c0 - R_Z(u) for Z = exp(Y - mu); the "lag decrement" of the
/// stationary volatility factor.
using LagDecrement = std::function<double(double)>;

/// Exact MSE of the dV + dW part of the Euler scheme:
/// n * 2 e^{2 mu} int_0^step (c0 - R_Z(u)) du.
double oracle_mse_euler_martingale(const ModelParams& params, int n);
double oracle_mse_euler_martingale(const ModelParams& params, int n,
                                   const LagDecrement& decrement);

/// Exact MSE of the dV + dW part of the trapezoidal scheme. The dV sum is
/// left-endpoint, so it contributes rho^2 times the Euler expression; the
/// trapezoidal dW sum contributes (1 - rho^2) e^{2 mu} n times
/// int_0^step [d(t) + d(step - t) - d(step)/2] dt, d = c0 - R_Z.
double oracle_mse_trapezoid_martingale(const ModelParams& params, int n);
double oracle_mse_trapezoid_martingale(const ModelParams& params, int n,
                                       const LagDecrement& decrement);

struct RatePoint {
  double n = 0.0;
  double rmse = 0.0;
};

struct RateFit {
  double slope = 0.0;      ///< fitted rate, ~ -H
  double intercept = 0.0;  ///< log of the RMSE constant
};

/// Ordinary least squares of log(rmse) on log(n). Needs >= 3 points with
/// distinct n; throws InsufficientData otherwise.
RateFit fit_rate(std::span<const RatePoint> points);

/// Streaming mean / variance (Welford), mergeable with Chan's update.
struct RunningStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept;
  void merge(const RunningStats& other) noexcept;
  /// Standard error of the mean; empty for fewer than two samples.
  std::optional<double> std_error() const noexcept;
};

enum class McMode { fast_rho0, joint };

const char* to_string(McMode mode) noexcept;

struct McConfig {
  std::vector<int> n_list;
  int fine_factor = 64;
  std::int64_t replications = 10000;
  std::uint64_t seed = 42;
  McMode mode = McMode::fast_rho0;
  /// Fit over all n instead of the largest half (at least three points).
  bool fit_all_points = false;
  Execution exec = Execution::parallel;
};

/// Largest fine grid accepted in joint mode.
inline constexpr int kJointMaxFineSteps = 4096;

struct ConvergenceRow {
  int n = 0;
  double mse_euler = 0.0;
  std::optional<double> se_euler;
  double mse_trapezoid = 0.0;
  std::optional<double> se_trapezoid;
  double oracle_euler = 0.0;
  double oracle_trapezoid = 0.0;
  std::int64_t replications = 0;
};

struct ConvergenceReport {
  ModelParams params;
  McConfig config;
  int fine_steps = 0;
  std::vector<ConvergenceRow> rows;
  std::optional<RateFit> euler_fit;
  std::optional<RateFit> trapezoid_fit;
  TheoryConstants theory;
};

/// Monte Carlo strong errors of both schemes against a fine-grid trapezoidal
/// reference on the coupled path.
///
/// Each replication samples one path on the grid with
/// max(n_list) * fine_factor steps (Davis-Harte for Y plus independent dW in
/// fast_rho0 mode, joint Cholesky otherwise) and evaluates both schemes on
/// every coarsening. Replications are grouped into fixed chunks merged in
/// order, so the parallel result does not depend on the thread count.
ConvergenceReport mc_strong_error(const ModelParams& params, const McConfig& config);

/// Indices of `rows` used for the default rate fit.
std::vector<std::size_t> fit_selection(std::size_t row_count, bool all_points);

}  // namespace roughvol
