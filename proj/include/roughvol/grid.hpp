// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace roughvol {

/// Uniform partition t_k = k T / n of [0, T].
class Grid {
 public:
  Grid(int n, double t_final);

  int n() const noexcept { return n_; }
  double t_final() const noexcept { return t_final_; }
  double step() const noexcept { return t_final_ / n_; }
  /// t_k; exact at both ends.
  double time(int k) const noexcept;
  std::vector<double> times() const;

  /// True when this grid refines `coarse`: same horizon, n a multiple.
  bool refines(const Grid& coarse) const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
  double t_final_;
};

struct SeedInfo {
  std::uint64_t seed = 0;
  std::uint64_t replication = 0;
  friend bool operator==(const SeedInfo&, const SeedInfo&) = default;
};

/// Y at the grid points (mean included) and the increments of V and W.
struct JointPath {
  Grid grid{1, 1.0};
  std::vector<double> y;   ///< n + 1 values
  std::vector<double> dv;  ///< n increments
  std::vector<double> dw;  ///< n increments
  SeedInfo seed_info;
};

/// Restricts a path to the grid with n / factor steps: Y is subsampled and
/// increments are summed in blocks. Throws IncompatibleGrids unless factor
/// divides n.
JointPath coarsen(const JointPath& path, int factor);

}  // namespace roughvol
