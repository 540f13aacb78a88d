// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/schemes.hpp"

#include <cmath>
#include <vector>

#include "roughvol/errors.hpp"

namespace roughvol {

namespace {

// Sums of 2^12 terms or more use Neumaier compensation.
constexpr int kCompensatedFrom = 1 << 12;

class Accumulator {
 public:
  explicit Accumulator(bool compensated) : compensated_(compensated) {}

  void add(double x) {
    if (!compensated_) {
      sum_ += x;
      return;
    }
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  bool compensated_;
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void check_path(const JointPath& path, const ModelParams& params) {
  const auto n = static_cast<std::size_t>(path.grid.n());
  if (path.grid.t_final() != params.t_final) {
    throw IncompatibleGrids("path horizon does not match t_final of the parameters");
  }
  if (path.y.size() != n + 1 || path.dw.size() != n || path.dv.size() != n) {
    throw ValidationError("path arrays are inconsistent with its grid");
  }
}

SchemeResult assemble(Scheme scheme, int n, double riemann, double dv, double dw) {
  SchemeResult r;
  r.scheme = scheme;
  r.grid_n = n;
  r.riemann_part = riemann;
  r.dv_part = dv;
  r.dw_part = dw;
  r.value = riemann + dv + dw;
  return r;
}

}  // namespace

const char* to_string(Scheme scheme) noexcept {
  return scheme == Scheme::euler ? "euler" : "trapezoid";
}

SchemeResult euler(const JointPath& path, const ModelParams& params) {
  check_path(path, params);
  const int n = path.grid.n();
  const bool comp = n >= kCompensatedFrom;
  Accumulator var(comp), dv(comp), dw(comp);
  for (int k = 0; k < n; ++k) {
    const double vol = std::exp(path.y[k]);
    var.add(vol * vol);
    dv.add(vol * path.dv[k]);
    dw.add(vol * path.dw[k]);
  }
  return assemble(Scheme::euler, n, -0.5 * path.grid.step() * var.value(),
                  params.rho * dv.value(),
                  std::sqrt(1.0 - params.rho * params.rho) * dw.value());
}

SchemeResult trapezoid(const JointPath& path, const ModelParams& params) {
  check_path(path, params);
  const int n = path.grid.n();
  const bool comp = n >= kCompensatedFrom;
  Accumulator var(comp), dv(comp), dw(comp);
  double vol_left = std::exp(path.y[0]);
  for (int k = 0; k < n; ++k) {
    const double vol_right = std::exp(path.y[k + 1]);
    var.add(0.5 * (vol_left * vol_left + vol_right * vol_right));
    dv.add(vol_left * path.dv[k]);
    dw.add(0.5 * (vol_left + vol_right) * path.dw[k]);
    vol_left = vol_right;
  }
  return assemble(Scheme::trapezoid, n, -0.5 * path.grid.step() * var.value(),
                  params.rho * dv.value(),
                  std::sqrt(1.0 - params.rho * params.rho) * dw.value());
}

double price_from_logprice(double x, const ModelParams& params) {
  return params.s0 * std::exp(x);
}

}  // namespace roughvol
