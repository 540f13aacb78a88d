// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace roughvol::cli {

std::string format_number(double x) {
  if (!std::isfinite(x)) throw std::domain_error("refusing to serialize a non-finite number");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_value(std::ostream& out, const Json& v) {
  switch (v.type()) {
    case Json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ',';
        first = false;
        out << Json(key).dump() << ':';
        write_value(out, item);
      }
      out << '}';
      break;
    }
    case Json::value_t::array: {
      out << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        write_value(out, v[i]);
      }
      out << ']';
      break;
    }
    case Json::value_t::number_float:
      out << format_number(v.get<double>());
      break;
    default:
      out << v.dump();
  }
}

Json optional_number(const std::optional<double>& x) {
  return x ? Json(*x) : Json(nullptr);
}

Json fit_pair(const ConvergenceReport& r, double RateFit::*field) {
  Json j = Json::object();
  j["euler"] = r.euler_fit ? Json((*r.euler_fit).*field) : Json(nullptr);
  j["trapezoid"] = r.trapezoid_fit ? Json((*r.trapezoid_fit).*field) : Json(nullptr);
  return j;
}

}  // namespace

void write_json(std::ostream& out, const Json& value) {
  write_value(out, value);
  out << '\n';
}

Json constants_json(const TheoryConstants& theory, const AsymptoticConstants& k) {
  Json j = Json::object();
  j["c_euler"] = theory.c_euler;
  j["c_trapezoid"] = theory.c_trapezoid;
  j["lower_bound"] = theory.lower_bound;
  j["hurst"] = theory.hurst;
  j["c0"] = k.c0;
  j["c1"] = k.c1;
  j["variance_y"] = k.variance_y;
  return j;
}

void write_constants_csv(std::ostream& out, const TheoryConstants& theory,
                         const AsymptoticConstants& k) {
  out << "c_euler,c_trapezoid,lower_bound,hurst,c0,c1,variance_y\n";
  out << format_number(theory.c_euler) << ',' << format_number(theory.c_trapezoid) << ','
      << format_number(theory.lower_bound) << ',' << format_number(theory.hurst) << ','
      << format_number(k.c0) << ',' << format_number(k.c1) << ','
      << format_number(k.variance_y) << '\n';
}

void write_kernel_csv(std::ostream& out, const std::vector<KernelRow>& rows) {
  out << "tau,r_y,r_z\n";
  for (const auto& r : rows) {
    out << format_number(r.tau) << ',' << format_number(r.r_y) << ',' << format_number(r.r_z)
        << '\n';
  }
}

Json kernel_json(const std::vector<KernelRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back({{"tau", r.tau}, {"r_y", r.r_y}, {"r_z", r.r_z}});
  return arr;
}

void write_path_csv(std::ostream& out, const JointPath& path) {
  out << "k,t,y,dv,dw\n";
  const int n = path.grid.n();
  for (int k = 0; k <= n; ++k) {
    out << k << ',' << format_number(path.grid.time(k)) << ',' << format_number(path.y[k]) << ',';
    if (k < n && !path.dv.empty()) out << format_number(path.dv[k]);
    out << ',';
    if (k < n && !path.dw.empty()) out << format_number(path.dw[k]);
    out << '\n';
  }
}

Json path_json(const JointPath& path) {
  Json arr = Json::array();
  const int n = path.grid.n();
  for (int k = 0; k <= n; ++k) {
    Json row = Json::object();
    row["k"] = k;
    row["t"] = path.grid.time(k);
    row["y"] = path.y[k];
    row["dv"] = (k < n && !path.dv.empty()) ? Json(path.dv[k]) : Json(nullptr);
    row["dw"] = (k < n && !path.dw.empty()) ? Json(path.dw[k]) : Json(nullptr);
    arr.push_back(std::move(row));
  }
  return arr;
}

Json report_json(const ConvergenceReport& r) {
  Json config = Json::object();
  config["hurst"] = r.params.hurst;
  config["lambda"] = r.params.lambda;
  config["theta"] = r.params.theta;
  config["mu"] = r.params.mu;
  config["rho"] = r.params.rho;
  config["s0"] = r.params.s0;
  config["t_final"] = r.params.t_final;
  config["n_list"] = r.config.n_list;
  config["fine_factor"] = r.config.fine_factor;
  config["fine_steps"] = r.fine_steps;
  config["replications"] = r.config.replications;
  config["seed"] = r.config.seed;
  config["mode"] = to_string(r.config.mode);
  config["fit_all_points"] = r.config.fit_all_points;

  Json theory = Json::object();
  theory["c_euler"] = r.theory.c_euler;
  theory["c_trapezoid"] = r.theory.c_trapezoid;
  theory["lower_bound"] = r.theory.lower_bound;
  theory["hurst"] = r.theory.hurst;

  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j = Json::object();
    j["n"] = row.n;
    j["replications"] = row.replications;
    j["mse_euler"] = row.mse_euler;
    j["se_euler"] = optional_number(row.se_euler);
    j["mse_trapezoid"] = row.mse_trapezoid;
    j["se_trapezoid"] = optional_number(row.se_trapezoid);
    j["oracle_euler"] = row.oracle_euler;
    j["oracle_trapezoid"] = row.oracle_trapezoid;
    rows.push_back(std::move(j));
  }

  Json out = Json::object();
  out["config"] = std::move(config);
  out["theory"] = std::move(theory);
  out["rows"] = std::move(rows);
  out["fitted_rate"] = fit_pair(r, &RateFit::slope);
  out["fitted_log_constant"] = fit_pair(r, &RateFit::intercept);
  return out;
}

void write_report_csv(std::ostream& out, const ConvergenceReport& r) {
  out << "n,mse_euler,se_euler,mse_trap,se_trap,oracle_euler,oracle_trap\n";
  auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
  for (const auto& row : r.rows) {
    out << row.n << ',' << format_number(row.mse_euler) << ',' << opt(row.se_euler) << ','
        << format_number(row.mse_trapezoid) << ',' << opt(row.se_trapezoid) << ','
        << format_number(row.oracle_euler) << ',' << format_number(row.oracle_trapezoid) << '\n';
  }
}

}  // namespace roughvol::cli
