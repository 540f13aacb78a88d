// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/grid.hpp"

#include <cmath>
#include <string>

#include "roughvol/errors.hpp"

namespace roughvol {

Grid::Grid(int n, double t_final) : n_(n), t_final_(t_final) {
  if (n < 1) throw ValidationError("grid needs n >= 1 (got " + std::to_string(n) + ")");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw ValidationError("grid needs t_final > 0");
  }
}

double Grid::time(int k) const noexcept {
  if (k == n_) return t_final_;
  return static_cast<double>(k) * t_final_ / n_;
}

std::vector<double> Grid::times() const {
  std::vector<double> out(static_cast<std::size_t>(n_) + 1);
  for (int k = 0; k <= n_; ++k) out[k] = time(k);
  return out;
}

bool Grid::refines(const Grid& coarse) const noexcept {
  return t_final_ == coarse.t_final_ && n_ % coarse.n_ == 0;
}

JointPath coarsen(const JointPath& path, int factor) {
  const int n = path.grid.n();
  if (factor < 1 || n % factor != 0) {
    throw IncompatibleGrids("cannot coarsen a grid of " + std::to_string(n) +
                            " steps by a factor of " + std::to_string(factor));
  }
  if (factor == 1) return path;
  const int coarse_n = n / factor;
  JointPath out;
  out.grid = Grid(coarse_n, path.grid.t_final());
  out.seed_info = path.seed_info;
  out.y.resize(static_cast<std::size_t>(coarse_n) + 1);
  for (int k = 0; k <= coarse_n; ++k) out.y[k] = path.y[static_cast<std::size_t>(k) * factor];

  auto block_sums = [&](const std::vector<double>& fine) {
    std::vector<double> coarse;
    if (fine.empty()) return coarse;
    coarse.assign(static_cast<std::size_t>(coarse_n), 0.0);
    for (int k = 0; k < coarse_n; ++k) {
      double s = 0.0;
      for (int j = 0; j < factor; ++j) s += fine[static_cast<std::size_t>(k) * factor + j];
      coarse[k] = s;
    }
    return coarse;
  };
  out.dv = block_sums(path.dv);
  out.dw = block_sums(path.dw);
  return out;
}

}  // namespace roughvol
