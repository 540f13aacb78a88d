// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "roughvol/execution.hpp"
#include "roughvol/grid.hpp"
#include "roughvol/params.hpp"
#include "roughvol/rng.hpp"

namespace roughvol {

/// Covariance of (Y^c_{t_0..t_n}, dV_0..dV_{n-1}), Y^c = Y - mu.
///
/// Layout of `full` (dimension 2n+1):
///   [ c11 (n+1 x n+1)   c12 (n+1 x n) ]
///   [ c12^T             c22 (n x n)   ]
/// with c22 = step * I and c12(i, j) = 0 whenever i <= j.
struct CovarianceBlocks {
  Grid grid{1, 1.0};
  Eigen::MatrixXd full;

  int n() const noexcept { return grid.n(); }
  int dim() const noexcept { return 2 * grid.n() + 1; }
  auto c11() const { return full.topLeftCorner(n() + 1, n() + 1); }
  auto c12() const { return full.topRightCorner(n() + 1, n()); }
  auto c22() const { return full.bottomRightCorner(n(), n()); }
};

/// Builds the joint covariance. (Y, dV) is jointly stationary, so c11 is
/// Toeplitz and c12 lower-triangular Toeplitz; the parallel kernel evaluates
/// one quadrature per lag and scatters.
CovarianceBlocks build_covariance(const ModelParams& params, const Grid& grid,
                                  Execution exec = Execution::parallel);

/// Entry-by-entry construction straight from r_y and cross_cov_yc_dv.
/// Serial, O(n^2) quadratures; kept to check build_covariance.
CovarianceBlocks build_covariance_reference(const ModelParams& params, const Grid& grid);

struct CholeskyFactor {
  Eigen::MatrixXd lower;
  bool jitter_applied = false;
  double jitter = 0.0;  ///< added to every diagonal entry when applied

  int dim() const noexcept { return static_cast<int>(lower.rows()); }
};

/// Dense Cholesky factorization. On failure retries once with diagonal
/// jitter 1e-12 * max diagonal; throws NotPositiveDefinite if that fails too.
CholeskyFactor cholesky_factor(const Eigen::MatrixXd& symmetric);
CholeskyFactor cholesky_factor(const CovarianceBlocks& blocks);

/// Exact joint sample from injected standard normals: `joint` (2n+1) drives
/// (Y^c, dV) through the factor, `w` (n) is scaled by sqrt(step) for dW.
JointPath sample_joint(const CholeskyFactor& factor, const Grid& grid,
                       const ModelParams& params, std::span<const double> joint,
                       std::span<const double> w);

/// Exact joint sample; normals come from the (seed, replication) streams
/// with roles `joint` and `dw`.
JointPath sample_joint(const CholeskyFactor& factor, const Grid& grid,
                       const ModelParams& params, SeedInfo seed);

/// Samples replications [first, first + count) at once. Identical law and
/// streams as the single-path overload; the matrix product is blocked.
std::vector<JointPath> sample_joint_batch(const CholeskyFactor& factor, const Grid& grid,
                                          const ModelParams& params, std::uint64_t seed,
                                          std::uint64_t first, int count);

/// Circulant embedding of c11 for the Davis-Harte sampler.
///
/// Size m = 2^(ceil(log2(n+1)) + 1). Eigenvalues in [-tol, 0) with
/// tol = 1e-10 * max eigenvalue are clamped to zero; anything below aborts
/// with EmbeddingNotPSD. Immutable after construction, shareable across
/// threads; each thread brings its own Workspace.
class CirculantEmbedding {
 public:
  CirculantEmbedding(const ModelParams& params, const Grid& grid,
                     Execution exec = Execution::parallel);
  ~CirculantEmbedding();
  CirculantEmbedding(CirculantEmbedding&&) noexcept;
  CirculantEmbedding& operator=(CirculantEmbedding&&) noexcept;

  /// FFT buffers for one thread.
  class Workspace {
   public:
    explicit Workspace(int m);

   private:
    friend class CirculantEmbedding;
    struct FftwFree {
      void operator()(double* p) const noexcept;
    };
    int m_;
    std::unique_ptr<double[], FftwFree> spectrum_;  // m + 2 reals, interleaved complex
    std::unique_ptr<double[], FftwFree> signal_;    // m reals
    std::vector<double> normals_;
  };

  int m() const noexcept { return m_; }
  const Grid& grid() const noexcept { return grid_; }
  const std::vector<double>& first_row() const noexcept { return first_row_; }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  int clamped_count() const noexcept { return clamped_; }

  Workspace make_workspace() const { return Workspace(m_); }

  /// Writes Y_{t_0..t_n} (mean included) into y_out from m injected normals.
  void synthesize(std::span<const double> normals, Workspace& ws,
                  std::span<double> y_out) const;
  /// Same, drawing the m normals from `stream`.
  void sample(GaussianStream& stream, Workspace& ws, std::span<double> y_out) const;

 private:
  Grid grid_;
  double mu_;
  int m_;
  std::vector<double> first_row_;
  std::vector<double> eigenvalues_;
  std::vector<double> scale_;  // sqrt(lambda_k / m) or sqrt(lambda_k / 2m)
  int clamped_ = 0;
  void* plan_ = nullptr;  // fftw_plan
};

/// One-shot Davis-Harte sample of Y_{t_0..t_n} (mean included).
std::vector<double> sample_fou_davis_harte(const ModelParams& params, const Grid& grid,
                                           GaussianStream& stream);

}  // namespace roughvol
