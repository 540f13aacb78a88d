// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <string>

#include "roughvol/errors.hpp"
#include "roughvol/kernels.hpp"
#include "roughvol/sampler.hpp"

namespace roughvol {

namespace {

CovarianceBlocks empty_blocks(const Grid& grid) {
  CovarianceBlocks blocks;
  blocks.grid = grid;
  const int dim = 2 * grid.n() + 1;
  blocks.full = Eigen::MatrixXd::Zero(dim, dim);
  const double step = grid.step();
  for (int j = 0; j < grid.n(); ++j) {
    const int d = grid.n() + 1 + j;
    blocks.full(d, d) = step;
  }
  return blocks;
}

void fill_from_lags(CovarianceBlocks& blocks, const std::vector<double>& ry,
                    const std::vector<double>& cross) {
  const int n = blocks.n();
  auto& c = blocks.full;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) c(i, j) = ry[static_cast<std::size_t>(std::abs(i - j))];
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double v = cross[static_cast<std::size_t>(i - j)];
      c(i, n + 1 + j) = v;
      c(n + 1 + j, i) = v;
    }
  }
}

void check_factor_shape(const CholeskyFactor& factor, const Grid& grid) {
  if (factor.dim() != 2 * grid.n() + 1) {
    throw IncompatibleGrids("Cholesky factor of dimension " + std::to_string(factor.dim()) +
                            " does not match a grid of " + std::to_string(grid.n()) +
                            " steps");
  }
}

JointPath split_sample(const Grid& grid, const ModelParams& params,
                       const Eigen::Ref<const Eigen::VectorXd>& correlated,
                       std::span<const double> w) {
  const int n = grid.n();
  JointPath path;
  path.grid = grid;
  path.y.resize(static_cast<std::size_t>(n) + 1);
  path.dv.resize(static_cast<std::size_t>(n));
  path.dw.resize(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) path.y[i] = params.mu + correlated[i];
  for (int j = 0; j < n; ++j) path.dv[j] = correlated[n + 1 + j];
  const double sd = std::sqrt(grid.step());
  for (int j = 0; j < n; ++j) path.dw[j] = sd * w[j];
  return path;
}

}  // namespace

CovarianceBlocks build_covariance(const ModelParams& params, const Grid& grid,
                                  Execution exec) {
  validate(params);
  const int n = grid.n();
  const double step = grid.step();
  std::vector<double> ry(static_cast<std::size_t>(n) + 1);
  std::vector<double> cross(static_cast<std::size_t>(n) + 1, 0.0);

  // Quadrature failures must not escape an OpenMP region.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::parallel)
  for (int k = 0; k <= n; ++k) {
    try {
      ry[k] = r_y(params, k * step);
      if (k > 0) cross[k] = cross_cov_yc_dv(params, k * step, 0.0, step);
    } catch (...) {
#pragma omp critical(roughvol_covariance_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CovarianceBlocks blocks = empty_blocks(grid);
  fill_from_lags(blocks, ry, cross);
  return blocks;
}

CovarianceBlocks build_covariance_reference(const ModelParams& params, const Grid& grid) {
  validate(params);
  const int n = grid.n();
  CovarianceBlocks blocks = empty_blocks(grid);
  auto& c = blocks.full;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = r_y(params, std::abs(grid.time(i) - grid.time(j)));
      c(i, j) = v;
      c(j, i) = v;
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = cross_cov_yc_dv(params, grid.time(i), grid.time(j), grid.time(j + 1));
      c(i, n + 1 + j) = v;
      c(n + 1 + j, i) = v;
    }
  }
  return blocks;
}

CholeskyFactor cholesky_factor(const Eigen::MatrixXd& symmetric) {
  CholeskyFactor out;
  Eigen::LLT<Eigen::MatrixXd> llt(symmetric);
  if (llt.info() == Eigen::Success) {
    out.lower = llt.matrixL();
    return out;
  }
  const double jitter = 1e-12 * symmetric.diagonal().maxCoeff();
  Eigen::MatrixXd shifted = symmetric;
  shifted.diagonal().array() += jitter;
  llt.compute(shifted);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("covariance matrix of dimension " +
                              std::to_string(symmetric.rows()) +
                              " is not positive definite even after diagonal jitter");
  }
  out.lower = llt.matrixL();
  out.jitter_applied = true;
  out.jitter = jitter;
  return out;
}

CholeskyFactor cholesky_factor(const CovarianceBlocks& blocks) {
  return cholesky_factor(blocks.full);
}

JointPath sample_joint(const CholeskyFactor& factor, const Grid& grid,
                       const ModelParams& params, std::span<const double> joint,
                       std::span<const double> w) {
  check_factor_shape(factor, grid);
  const int dim = factor.dim();
  if (static_cast<int>(joint.size()) != dim || static_cast<int>(w.size()) != grid.n()) {
    throw ValidationError("injected normals have the wrong length");
  }
  const Eigen::Map<const Eigen::VectorXd> xi(joint.data(), dim);
  const Eigen::VectorXd correlated = factor.lower.triangularView<Eigen::Lower>() * xi;
  return split_sample(grid, params, correlated, w);
}

JointPath sample_joint(const CholeskyFactor& factor, const Grid& grid,
                       const ModelParams& params, SeedInfo seed) {
  check_factor_shape(factor, grid);
  std::vector<double> xi(static_cast<std::size_t>(factor.dim()));
  std::vector<double> w(static_cast<std::size_t>(grid.n()));
  GaussianStream joint_stream({seed.seed, seed.replication, StreamRole::joint});
  GaussianStream w_stream({seed.seed, seed.replication, StreamRole::dw});
  joint_stream.fill(xi);
  w_stream.fill(w);
  JointPath path = sample_joint(factor, grid, params, xi, w);
  path.seed_info = seed;
  return path;
}

std::vector<JointPath> sample_joint_batch(const CholeskyFactor& factor, const Grid& grid,
                                          const ModelParams& params, std::uint64_t seed,
                                          std::uint64_t first, int count) {
  check_factor_shape(factor, grid);
  const int dim = factor.dim();
  const int n = grid.n();
  Eigen::MatrixXd xi(dim, count);
  std::vector<std::vector<double>> w(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r) {
    GaussianStream joint_stream({seed, first + r, StreamRole::joint});
    for (int i = 0; i < dim; ++i) xi(i, r) = joint_stream.next();
    GaussianStream w_stream({seed, first + r, StreamRole::dw});
    w[r].resize(static_cast<std::size_t>(n));
    w_stream.fill(w[r]);
  }
  const Eigen::MatrixXd correlated = factor.lower.triangularView<Eigen::Lower>() * xi;
  std::vector<JointPath> paths;
  paths.reserve(static_cast<std::size_t>(count));
  for (int r = 0; r < count; ++r) {
    paths.push_back(split_sample(grid, params, correlated.col(r), w[r]));
    paths.back().seed_info = {seed, first + r};
  }
  return paths;
}

}  // namespace roughvol
