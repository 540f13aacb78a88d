// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "roughvol/analysis.hpp"
#include "roughvol/errors.hpp"
#include "roughvol/sampler.hpp"
#include "roughvol/schemes.hpp"

namespace roughvol {

namespace {

// Fixed replication chunk; also the joint-mode batch width.
constexpr std::int64_t kChunk = 64;

struct ErrorStats {
  std::vector<RunningStats> euler;
  std::vector<RunningStats> trapezoid;

  explicit ErrorStats(std::size_t levels) : euler(levels), trapezoid(levels) {}

  void merge(const ErrorStats& other) {
    for (std::size_t i = 0; i < euler.size(); ++i) {
      euler[i].merge(other.euler[i]);
      trapezoid[i].merge(other.trapezoid[i]);
    }
  }
};

void validate_config(const ModelParams& params, const McConfig& cfg) {
  validate(params);
  if (cfg.n_list.empty()) throw ValidationError("n_list must not be empty");
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] < 1) throw ValidationError("n_list entries must be >= 1");
    if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1]) {
      throw ValidationError("n_list must be strictly increasing");
    }
  }
  if (cfg.fine_factor < 1) throw ValidationError("fine_factor must be >= 1");
  if (cfg.replications < 1) throw ValidationError("replications must be >= 1");
  if (cfg.mode == McMode::fast_rho0 && params.rho != 0.0) {
    throw ValidationError("mode fast-rho0 requires rho = 0");
  }
  const long long fine = static_cast<long long>(cfg.n_list.back()) * cfg.fine_factor;
  if (fine > (1LL << 26)) {
    throw TractabilityExceeded("fine grid of " + std::to_string(fine) + " steps is too large");
  }
  if (cfg.mode == McMode::joint && fine > kJointMaxFineSteps) {
    throw TractabilityExceeded("joint mode supports at most " +
                               std::to_string(kJointMaxFineSteps) +
                               " fine steps (requested " + std::to_string(fine) + ")");
  }
  for (int n : cfg.n_list) {
    if (fine % n != 0) {
      throw IncompatibleGrids("n = " + std::to_string(n) + " does not divide the fine grid of " +
                              std::to_string(fine) + " steps");
    }
  }
}

// Squared deviation of both schemes from the fine trapezoidal reference.
void score_path(const JointPath& fine, const ModelParams& params,
                const std::vector<int>& n_list, ErrorStats& stats) {
  const double reference = trapezoid(fine, params).value;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const JointPath coarse = coarsen(fine, fine.grid.n() / n_list[i]);
    const double e = euler(coarse, params).value - reference;
    const double t = trapezoid(coarse, params).value - reference;
    stats.euler[i].add(e * e);
    stats.trapezoid[i].add(t * t);
  }
}

class FastSampler {
 public:
  FastSampler(const ModelParams& params, const Grid& fine, Execution exec)
      : params_(params), embedding_(params, fine, exec) {}

  struct Scratch {
    CirculantEmbedding::Workspace ws;
    JointPath path;
  };

  Scratch make_scratch() const {
    const Grid& g = embedding_.grid();
    Scratch s{embedding_.make_workspace(), {}};
    s.path.grid = g;
    s.path.y.resize(static_cast<std::size_t>(g.n()) + 1);
    s.path.dv.assign(static_cast<std::size_t>(g.n()), 0.0);  // unused at rho = 0
    s.path.dw.resize(static_cast<std::size_t>(g.n()));
    return s;
  }

  const JointPath& draw(std::uint64_t seed, std::uint64_t rep, Scratch& s) const {
    GaussianStream dh({seed, rep, StreamRole::dh});
    embedding_.sample(dh, s.ws, s.path.y);
    GaussianStream dw({seed, rep, StreamRole::dw});
    const double sd = std::sqrt(embedding_.grid().step());
    for (double& x : s.path.dw) x = sd * dw.next();
    s.path.seed_info = {seed, rep};
    return s.path;
  }

 private:
  ModelParams params_;
  CirculantEmbedding embedding_;
};

ErrorStats run_fast(const ModelParams& params, const McConfig& cfg, const Grid& fine) {
  const FastSampler sampler(params, fine, cfg.exec);
  const std::size_t levels = cfg.n_list.size();

  if (cfg.exec == Execution::serial) {
    ErrorStats stats(levels);
    auto scratch = sampler.make_scratch();
    for (std::int64_t r = 0; r < cfg.replications; ++r) {
      score_path(sampler.draw(cfg.seed, static_cast<std::uint64_t>(r), scratch), params,
                 cfg.n_list, stats);
    }
    return stats;
  }

  const std::int64_t chunks = (cfg.replications + kChunk - 1) / kChunk;
  std::vector<ErrorStats> partial(static_cast<std::size_t>(chunks), ErrorStats(levels));
  std::exception_ptr failure;
#pragma omp parallel
  {
    auto scratch = sampler.make_scratch();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      try {
        const std::int64_t end = std::min(cfg.replications, (c + 1) * kChunk);
        for (std::int64_t r = c * kChunk; r < end; ++r) {
          score_path(sampler.draw(cfg.seed, static_cast<std::uint64_t>(r), scratch), params,
                     cfg.n_list, partial[c]);
        }
      } catch (...) {
#pragma omp critical(roughvol_mc_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  ErrorStats total(levels);
  for (const auto& p : partial) total.merge(p);
  return total;
}

ErrorStats run_joint(const ModelParams& params, const McConfig& cfg, const Grid& fine) {
  const CholeskyFactor factor = cholesky_factor(build_covariance(params, fine, cfg.exec));
  const std::size_t levels = cfg.n_list.size();

  if (cfg.exec == Execution::serial) {
    ErrorStats stats(levels);
    for (std::int64_t r = 0; r < cfg.replications; ++r) {
      score_path(sample_joint(factor, fine, params, {cfg.seed, static_cast<std::uint64_t>(r)}),
                 params, cfg.n_list, stats);
    }
    return stats;
  }

  const std::int64_t chunks = (cfg.replications + kChunk - 1) / kChunk;
  std::vector<ErrorStats> partial(static_cast<std::size_t>(chunks), ErrorStats(levels));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    try {
      const std::int64_t first = c * kChunk;
      const int count = static_cast<int>(std::min(cfg.replications, first + kChunk) - first);
      const auto paths = sample_joint_batch(factor, fine, params, cfg.seed,
                                            static_cast<std::uint64_t>(first), count);
      for (const auto& path : paths) score_path(path, params, cfg.n_list, partial[c]);
    } catch (...) {
#pragma omp critical(roughvol_mc_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  ErrorStats total(levels);
  for (const auto& p : partial) total.merge(p);
  return total;
}

std::optional<RateFit> fit_scheme(const std::vector<ConvergenceRow>& rows, bool all_points,
                                  bool euler_scheme) {
  const auto idx = fit_selection(rows.size(), all_points);
  if (idx.empty()) return std::nullopt;
  std::vector<RatePoint> points;
  for (std::size_t i : idx) {
    const double mse = euler_scheme ? rows[i].mse_euler : rows[i].mse_trapezoid;
    points.push_back({static_cast<double>(rows[i].n), std::sqrt(mse)});
  }
  return fit_rate(points);
}

}  // namespace

ConvergenceReport mc_strong_error(const ModelParams& params, const McConfig& cfg) {
  validate_config(params, cfg);
  const int fine_steps = cfg.n_list.back() * cfg.fine_factor;
  const Grid fine(fine_steps, params.t_final);

  const ErrorStats stats = cfg.mode == McMode::fast_rho0 ? run_fast(params, cfg, fine)
                                                         : run_joint(params, cfg, fine);

  ConvergenceReport report;
  report.params = params;
  report.config = cfg;
  report.fine_steps = fine_steps;
  report.theory = theory_constants(params);
  report.rows.resize(cfg.n_list.size());
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    auto& row = report.rows[i];
    row.n = cfg.n_list[i];
    row.replications = stats.euler[i].count;
    row.mse_euler = stats.euler[i].mean;
    row.se_euler = stats.euler[i].std_error();
    row.mse_trapezoid = stats.trapezoid[i].mean;
    row.se_trapezoid = stats.trapezoid[i].std_error();
    row.oracle_euler = oracle_mse_euler_martingale(params, row.n);
    row.oracle_trapezoid = oracle_mse_trapezoid_martingale(params, row.n);
  }
  if (std::all_of(report.rows.begin(), report.rows.end(),
                  [](const ConvergenceRow& r) { return r.mse_euler > 0.0 && r.mse_trapezoid > 0.0; })) {
    report.euler_fit = fit_scheme(report.rows, cfg.fit_all_points, true);
    report.trapezoid_fit = fit_scheme(report.rows, cfg.fit_all_points, false);
  }
  return report;
}

}  // namespace roughvol
