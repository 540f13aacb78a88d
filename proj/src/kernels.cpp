// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/kernels.hpp"

#include <cmath>
#include <string>

#include "roughvol/errors.hpp"
#include "roughvol/quadrature.hpp"

namespace roughvol {

namespace {

constexpr QuadratureOptions kKernelQuad{1e-12, 0.0, 4000};

// exp(-60) is far below double resolution relative to the integral.
constexpr double kTailCutoff = 60.0;

double stationary_scale(const ModelParams& p) {
  return std::tgamma(2.0 * p.hurst + 1.0) / (2.0 * std::pow(p.lambda, 2.0 * p.hurst));
}

// H * int_tau^inf exp(-lambda (u - tau)) u^{2H-1} du
double upper_tail_integral(const ModelParams& p, double tau) {
  const double two_h = 2.0 * p.hurst;
  const double inv = 1.0 / two_h;
  const double lambda = p.lambda;
  const double lo = std::pow(tau, two_h);
  const double hi = std::pow(tau + kTailCutoff / lambda, two_h);
  auto f = [=](double v) { return std::exp(-lambda * (std::pow(v, inv) - tau)); };
  return 0.5 * integrate_adaptive(f, lo, hi, kKernelQuad).value;
}

// H * int_0^tau exp(-lambda (tau - u)) u^{2H-1} du
double lower_decay_integral(const ModelParams& p, double tau) {
  const double two_h = 2.0 * p.hurst;
  const double inv = 1.0 / two_h;
  const double lambda = p.lambda;
  auto f = [=](double v) { return std::exp(-lambda * (tau - std::pow(v, inv))); };
  return 0.5 * integrate_adaptive(f, 0.0, std::pow(tau, two_h), kKernelQuad).value;
}

// H * int_0^tau cosh(lambda (tau - u)) u^{2H-1} du
double cosh_integral(const ModelParams& p, double tau) {
  const double two_h = 2.0 * p.hurst;
  const double inv = 1.0 / two_h;
  const double lambda = p.lambda;
  auto f = [=](double v) { return std::cosh(lambda * (tau - std::pow(v, inv))); };
  return 0.5 * integrate_adaptive(f, 0.0, std::pow(tau, two_h), kKernelQuad).value;
}

void require_lag(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ValidationError("lag must be finite and >= 0 (got " + std::to_string(tau) + ")");
  }
}

void require_small_lag(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw ValidationError("small-lag check needs 0 < tau <= 1 (got " +
                          std::to_string(tau) + ")");
  }
}

void require_exponent(double a) {
  if (a == 0.0 || !std::isfinite(a)) {
    throw ValidationError("exponent a must be finite and nonzero");
  }
}

// Cheap enough for inner loops; the full check only runs to build the message.
void require_kernel_params(const ModelParams& p) {
  if (!(p.hurst > 0.0 && p.hurst < 0.5 && p.lambda > 0.0 && std::isfinite(p.lambda) &&
        p.theta > 0.0 && std::isfinite(p.theta))) {
    validate(p);
  }
}

}  // namespace

double variance_y(const ModelParams& p) {
  require_kernel_params(p);
  return p.theta * p.theta * stationary_scale(p);
}

double r_y(const ModelParams& p, double tau) {
  require_kernel_params(p);
  require_lag(tau);
  if (tau == 0.0) return variance_y(p);
  const double g = stationary_scale(p);
  const double bracket = upper_tail_integral(p, tau) + std::exp(-p.lambda * tau) * g -
                         lower_decay_integral(p, tau);
  return 0.5 * p.theta * p.theta * bracket;
}

double r_y_decrement(const ModelParams& p, double tau) {
  require_kernel_params(p);
  require_lag(tau);
  if (tau == 0.0) return 0.0;
  if (p.lambda * tau > 1.0) return variance_y(p) - r_y(p, tau);
  // cosh(x) - 1 = 2 sinh^2(x/2)
  const double s = std::sinh(0.5 * p.lambda * tau);
  const double g = stationary_scale(p);
  return p.theta * p.theta * (cosh_integral(p, tau) - 2.0 * g * s * s);
}

double r_y_small_lag_check(const ModelParams& p, double tau) {
  require_small_lag(tau);
  return r_y_decrement(p, tau) / std::pow(tau, 2.0 * p.hurst);
}

double r_z(const ModelParams& p, double a, double tau) {
  require_exponent(a);
  const double a2 = a * a;
  return std::exp(a2 * variance_y(p)) * std::expm1(a2 * r_y(p, tau));
}

double r_z_decrement(const ModelParams& p, double a, double tau) {
  require_exponent(a);
  const double a2 = a * a;
  return -std::exp(2.0 * a2 * variance_y(p)) * std::expm1(-a2 * r_y_decrement(p, tau));
}

double r_z_small_lag_check(const ModelParams& p, double a, double tau) {
  require_small_lag(tau);
  return r_z_decrement(p, a, tau) / std::pow(tau, 2.0 * p.hurst);
}

AsymptoticConstants asymptotic_constants(const ModelParams& p, double a) {
  require_exponent(a);
  AsymptoticConstants out;
  const double a2 = a * a;
  out.a = a;
  out.variance_y = variance_y(p);
  out.c0 = std::exp(a2 * out.variance_y) * std::expm1(a2 * out.variance_y);
  out.c1 = 0.5 * a2 * p.theta * p.theta * std::exp(2.0 * a2 * out.variance_y);
  return out;
}

double mvn_scale(double h) {
  const double g2 = 2.0 * h * std::tgamma(1.5 - h) /
                    (std::tgamma(h + 0.5) * std::tgamma(2.0 - 2.0 * h));
  return std::sqrt(g2);
}

double gamma_mvn(double h, double t, double s) {
  if (t <= 0.0 || s <= 0.0) return 0.0;
  const double alpha = h + 0.5;
  const double m = std::min(t, s);
  return mvn_scale(h) / alpha * (std::pow(t, alpha) - std::pow(t - m, alpha));
}

double gamma_mvn_increment(double h, double t, double s1, double s2) {
  if (t <= 0.0) return 0.0;
  s1 = std::max(s1, 0.0);
  s2 = std::max(s2, 0.0);
  const double alpha = h + 0.5;
  // The t^alpha terms cancel exactly.
  return mvn_scale(h) / alpha *
         (std::pow(t - std::min(t, s1), alpha) - std::pow(t - std::min(t, s2), alpha));
}

double cross_cov_yc_dv(const ModelParams& p, double t, double s1, double s2) {
  require_kernel_params(p);
  if (!(s1 >= 0.0 && s1 < s2)) {
    throw ValidationError("cross covariance needs 0 <= s1 < s2");
  }
  if (t <= s1) return 0.0;

  const double h = p.hurst;
  const double lambda = p.lambda;
  // lambda e^{-lambda t} int_0^t e^{lambda u} (gamma(u,s2) - gamma(u,s1)) du.
  // The integrand vanishes on [0, s1]; on [s1, min(t,s2)] and [s2, t] it has
  // a (u - left)^{H+1/2} endpoint, smoothed by u = left + w^2.
  auto piece = [&](double lo, double hi) {
    auto f = [=](double w) {
      const double u = lo + w * w;
      return 2.0 * w * std::exp(-lambda * (t - u)) * gamma_mvn_increment(h, u, s1, s2);
    };
    return integrate_adaptive(f, 0.0, std::sqrt(hi - lo), kKernelQuad).value;
  };
  double integral = piece(s1, std::min(t, s2));
  if (t > s2) integral += piece(s2, t);

  return p.theta * (gamma_mvn_increment(h, t, s1, s2) - lambda * integral);
}

}  // namespace roughvol
