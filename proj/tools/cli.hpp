// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "report_io.hpp"
#include "roughvol/params.hpp"

namespace roughvol::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kQuadrature = 3,
  kSampler = 4,
  kTractability = 5,
};

struct ExperimentConfig {
  std::string command;  ///< constants | kernel | sample | convergence
  ModelParams params;
  int n = 64;
  std::vector<int> n_list{16, 32, 64, 128, 256, 512};
  int fine_factor = 64;
  std::int64_t replications = 10000;
  std::uint64_t seed = 42;
  double a = 1.0;
  double tau_min = 0.0;
  double tau_max = 1.0;
  int tau_steps = 101;
  std::string sampler = "cholesky";  ///< cholesky | davis-harte
  std::string mode = "fast-rho0";    ///< fast-rho0 | joint
  std::string format;                ///< csv | json; empty picks the command default
  std::string out;                   ///< empty writes to the output stream
  int threads = 0;                   ///< 0 keeps the OpenMP default
  bool fit_all = false;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

Json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const Json& j);

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughvol::cli
