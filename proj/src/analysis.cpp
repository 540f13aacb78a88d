// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "roughvol/errors.hpp"
#include "roughvol/kernels.hpp"
#include "roughvol/quadrature.hpp"

namespace roughvol {

namespace {

constexpr QuadratureOptions kOracleQuad{1e-12, 0.0, 4000};

void require_steps(int n) {
  if (n < 1) throw ValidationError("oracle needs n >= 1 (got " + std::to_string(n) + ")");
}

LagDecrement model_decrement(const ModelParams& params) {
  return [params](double u) { return r_z_decrement(params, 1.0, u); };
}

// int_0^step d(u) du with u = step w^2 to soften the u^{2H} cusp at 0.
double integrated_decrement(const LagDecrement& d, double step) {
  auto f = [&](double w) { return 2.0 * step * w * d(step * w * w); };
  return integrate_adaptive(f, 0.0, 1.0, kOracleQuad).value;
}

}  // namespace

TheoryConstants theory_constants(const ModelParams& params) {
  validate(params);
  const auto k = asymptotic_constants(params, 1.0);
  const double h = params.hurst;
  const double scale = std::exp(2.0 * params.mu) * k.c1 * std::pow(params.t_final, 2.0 * h + 1.0);
  const double shrink = 1.0 - params.rho * params.rho;
  TheoryConstants out;
  out.hurst = h;
  out.c_euler = 2.0 * scale / (2.0 * h + 1.0);
  out.c_trapezoid = out.c_euler - shrink * scale / 2.0;
  out.lower_bound = shrink * 2.0 / ((2.0 * h + 1.0) * (2.0 * h + 2.0)) * scale;
  return out;
}

double oracle_mse_euler_martingale(const ModelParams& params, int n) {
  validate(params);
  return oracle_mse_euler_martingale(params, n, model_decrement(params));
}

double oracle_mse_euler_martingale(const ModelParams& params, int n,
                                   const LagDecrement& decrement) {
  require_steps(n);
  const double step = params.t_final / n;
  return n * 2.0 * std::exp(2.0 * params.mu) * integrated_decrement(decrement, step);
}

double oracle_mse_trapezoid_martingale(const ModelParams& params, int n) {
  validate(params);
  return oracle_mse_trapezoid_martingale(params, n, model_decrement(params));
}

double oracle_mse_trapezoid_martingale(const ModelParams& params, int n,
                                       const LagDecrement& decrement) {
  require_steps(n);
  const double step = params.t_final / n;
  const double rho2 = params.rho * params.rho;
  const double integral = integrated_decrement(decrement, step);
  // By symmetry int_0^step d(step - t) dt equals the same integral.
  const double trapezoid_step = 2.0 * integral - 0.5 * step * decrement(step);
  const double per_step = rho2 * 2.0 * integral + (1.0 - rho2) * trapezoid_step;
  return n * std::exp(2.0 * params.mu) * per_step;
}

RateFit fit_rate(std::span<const RatePoint> points) {
  if (points.size() < 3) {
    throw InsufficientData("rate fit needs at least 3 points (got " +
                           std::to_string(points.size()) + ")");
  }
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    if (!(p.n > 0.0) || !(p.rmse > 0.0)) {
      throw InsufficientData("rate fit needs positive n and RMSE");
    }
    mx += std::log(p.n);
    my += std::log(p.rmse);
  }
  const double count = static_cast<double>(points.size());
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(p.rmse) - my);
  }
  if (sxx == 0.0) throw InsufficientData("rate fit needs distinct n");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

void RunningStats::add(double x) noexcept {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void RunningStats::merge(const RunningStats& other) noexcept {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(count);
  const auto nb = static_cast<double>(other.count);
  const double total = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / total;
  m2 += other.m2 + delta * delta * na * nb / total;
  count += other.count;
}

std::optional<double> RunningStats::std_error() const noexcept {
  if (count < 2) return std::nullopt;
  const auto c = static_cast<double>(count);
  return std::sqrt(m2 / (c - 1.0) / c);
}

const char* to_string(McMode mode) noexcept {
  return mode == McMode::fast_rho0 ? "fast-rho0" : "joint";
}

std::vector<std::size_t> fit_selection(std::size_t row_count, bool all_points) {
  std::vector<std::size_t> idx;
  if (row_count < 3) return idx;
  std::size_t used = all_points ? row_count : std::max<std::size_t>(3, (row_count + 1) / 2);
  used = std::min(used, row_count);
  for (std::size_t i = row_count - used; i < row_count; ++i) idx.push_back(i);
  return idx;
}

}  // namespace roughvol
