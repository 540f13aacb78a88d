// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <utility>

#include <fftw3.h>

#include "roughvol/errors.hpp"
#include "roughvol/kernels.hpp"
#include "roughvol/sampler.hpp"

namespace roughvol {

namespace {

// FFTW planning is not thread-safe; execution with new-array calls is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

int embedding_size(int n) {
  int bits = 0;
  while ((1 << bits) < n + 1) ++bits;
  return 1 << (bits + 1);
}

}  // namespace

void CirculantEmbedding::Workspace::FftwFree::operator()(double* p) const noexcept {
  fftw_free(p);
}

CirculantEmbedding::Workspace::Workspace(int m)
    : m_(m),
      spectrum_(fftw_alloc_real(static_cast<std::size_t>(m) + 2)),
      signal_(fftw_alloc_real(static_cast<std::size_t>(m))),
      normals_(static_cast<std::size_t>(m)) {}

CirculantEmbedding::CirculantEmbedding(const ModelParams& params, const Grid& grid,
                                       Execution exec)
    : grid_(grid), mu_(params.mu), m_(embedding_size(grid.n())) {
  validate(params);
  const int half = m_ / 2;
  const double step = grid.step();

  first_row_.assign(static_cast<std::size_t>(m_), 0.0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64) if (exec == Execution::parallel)
  for (int j = 0; j <= half; ++j) {
    try {
      first_row_[j] = r_y(params, j * step);
    } catch (...) {
#pragma omp critical(roughvol_embedding_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (int j = 1; j < half; ++j) first_row_[m_ - j] = first_row_[j];

  // The circulant is symmetric, so its spectrum is the real part of the DFT
  // of the first row.
  {
    Workspace ws(m_);
    std::copy(first_row_.begin(), first_row_.end(), ws.signal_.get());
    fftw_plan forward;
    {
      std::lock_guard lock(planner_mutex());
      forward = fftw_plan_dft_r2c_1d(m_, ws.signal_.get(),
                                     reinterpret_cast<fftw_complex*>(ws.spectrum_.get()),
                                     FFTW_ESTIMATE);
    }
    fftw_execute(forward);
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(forward);
    }
    eigenvalues_.resize(static_cast<std::size_t>(m_));
    for (int k = 0; k <= half; ++k) eigenvalues_[k] = ws.spectrum_[2 * k];
    for (int k = 1; k < half; ++k) eigenvalues_[m_ - k] = eigenvalues_[k];
  }

  const double largest = *std::max_element(eigenvalues_.begin(), eigenvalues_.end());
  const double tol = 1e-10 * largest;
  for (double& ev : eigenvalues_) {
    if (ev >= 0.0) continue;
    if (ev < -tol) {
      throw EmbeddingNotPSD("circulant embedding of size " + std::to_string(m_) +
                            " has eigenvalue " + std::to_string(ev) +
                            " below the clamping tolerance " + std::to_string(-tol));
    }
    ev = 0.0;
    ++clamped_;
  }

  scale_.resize(static_cast<std::size_t>(half) + 1);
  for (int k = 0; k <= half; ++k) {
    const bool real_mode = (k == 0 || k == half);
    scale_[k] = std::sqrt(eigenvalues_[k] / (real_mode ? m_ : 2.0 * m_));
  }

  Workspace ws(m_);
  std::lock_guard lock(planner_mutex());
  plan_ = fftw_plan_dft_c2r_1d(m_, reinterpret_cast<fftw_complex*>(ws.spectrum_.get()),
                               ws.signal_.get(), FFTW_ESTIMATE);
}

CirculantEmbedding::~CirculantEmbedding() {
  if (plan_ != nullptr) {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  }
}

CirculantEmbedding::CirculantEmbedding(CirculantEmbedding&& other) noexcept
    : grid_(other.grid_),
      mu_(other.mu_),
      m_(other.m_),
      first_row_(std::move(other.first_row_)),
      eigenvalues_(std::move(other.eigenvalues_)),
      scale_(std::move(other.scale_)),
      clamped_(other.clamped_),
      plan_(std::exchange(other.plan_, nullptr)) {}

CirculantEmbedding& CirculantEmbedding::operator=(CirculantEmbedding&& other) noexcept {
  if (this != &other) {
    if (plan_ != nullptr) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
    grid_ = other.grid_;
    mu_ = other.mu_;
    m_ = other.m_;
    first_row_ = std::move(other.first_row_);
    eigenvalues_ = std::move(other.eigenvalues_);
    scale_ = std::move(other.scale_);
    clamped_ = other.clamped_;
    plan_ = std::exchange(other.plan_, nullptr);
  }
  return *this;
}

void CirculantEmbedding::synthesize(std::span<const double> normals, Workspace& ws,
                                    std::span<double> y_out) const {
  const int half = m_ / 2;
  if (static_cast<int>(normals.size()) != m_ || ws.m_ != m_ ||
      static_cast<int>(y_out.size()) != grid_.n() + 1) {
    throw ValidationError("circulant embedding buffers have the wrong size");
  }
  // Hermitian spectrum from m normals: modes 0 and m/2 are real, the
  // remaining m/2 - 1 modes take a (re, im) pair each.
  double* s = ws.spectrum_.get();
  s[0] = scale_[0] * normals[0];
  s[1] = 0.0;
  s[2 * half] = scale_[half] * normals[1];
  s[2 * half + 1] = 0.0;
  for (int k = 1; k < half; ++k) {
    s[2 * k] = scale_[k] * normals[2 * k];
    s[2 * k + 1] = scale_[k] * normals[2 * k + 1];
  }
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_), reinterpret_cast<fftw_complex*>(s),
                       ws.signal_.get());
  for (int j = 0; j <= grid_.n(); ++j) y_out[j] = mu_ + ws.signal_.get()[j];
}

void CirculantEmbedding::sample(GaussianStream& stream, Workspace& ws,
                                std::span<double> y_out) const {
  stream.fill(ws.normals_);
  synthesize(ws.normals_, ws, y_out);
}

std::vector<double> sample_fou_davis_harte(const ModelParams& params, const Grid& grid,
                                           GaussianStream& stream) {
  const CirculantEmbedding embedding(params, grid);
  auto ws = embedding.make_workspace();
  std::vector<double> y(static_cast<std::size_t>(grid.n()) + 1);
  embedding.sample(stream, ws, y);
  return y;
}

}  // namespace roughvol
