// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

// Serialization of results to CSV and JSON.

#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "roughvol/analysis.hpp"
#include "roughvol/grid.hpp"
#include "roughvol/kernels.hpp"

namespace roughvol::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits, shortest of %g style; throws on NaN/Inf.
std::string format_number(double x);

/// Writes `value` compactly, with every float through format_number.
void write_json(std::ostream& out, const Json& value);

Json constants_json(const TheoryConstants& theory, const AsymptoticConstants& k);
void write_constants_csv(std::ostream& out, const TheoryConstants& theory,
                         const AsymptoticConstants& k);

struct KernelRow {
  double tau = 0.0;
  double r_y = 0.0;
  double r_z = 0.0;
};
void write_kernel_csv(std::ostream& out, const std::vector<KernelRow>& rows);
Json kernel_json(const std::vector<KernelRow>& rows);

// A path without dv (or dw) leaves that column empty.
void write_path_csv(std::ostream& out, const JointPath& path);
Json path_json(const JointPath& path);

Json report_json(const ConvergenceReport& report);
void write_report_csv(std::ostream& out, const ConvergenceReport& report);

}  // namespace roughvol::cli
