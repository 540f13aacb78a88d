// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "roughvol/analysis.hpp"
#include "roughvol/errors.hpp"
#include "roughvol/kernels.hpp"
#include "roughvol/rng.hpp"
#include "roughvol/sampler.hpp"

namespace roughvol::cli {

namespace {

const char* const kCommands[] = {"constants", "kernel", "sample", "convergence"};

std::string default_format(const std::string& command) {
  return command == "constants" || command == "convergence" ? "json" : "csv";
}

McMode parse_mode(const std::string& s) {
  if (s == "fast-rho0") return McMode::fast_rho0;
  if (s == "joint") return McMode::joint;
  throw ValidationError("mode must be fast-rho0 or joint (got " + s + ")");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::quadrature_not_converged:
      return kQuadrature;
    case ErrorKind::not_positive_definite:
    case ErrorKind::embedding_not_psd:
      return kSampler;
    case ErrorKind::tractability_exceeded:
      return kTractability;
    default:
      return kValidation;
  }
}

std::vector<KernelRow> kernel_rows(const ExperimentConfig& c) {
  if (!(c.tau_min >= 0.0 && c.tau_max >= c.tau_min) || c.tau_steps < 1) {
    throw ValidationError("tau grid needs 0 <= tau-min <= tau-max and tau-steps >= 1");
  }
  if (!(c.a > 0.0)) throw ValidationError("a must be > 0");
  std::vector<KernelRow> rows;
  for (int i = 0; i < c.tau_steps; ++i) {
    const double tau = c.tau_steps == 1
                           ? c.tau_min
                           : c.tau_min + (c.tau_max - c.tau_min) * i / (c.tau_steps - 1);
    rows.push_back({tau, r_y(c.params, tau), r_z(c.params, c.a, tau)});
  }
  return rows;
}

JointPath sample_path(const ExperimentConfig& c) {
  const Grid grid(c.n, c.params.t_final);
  if (c.sampler == "cholesky") {
    if (c.n > kJointMaxFineSteps) {
      throw TractabilityExceeded("cholesky sampling supports at most " +
                                 std::to_string(kJointMaxFineSteps) + " steps");
    }
    const auto factor = cholesky_factor(build_covariance(c.params, grid));
    return sample_joint(factor, grid, c.params, SeedInfo{c.seed, 0});
  }
  if (c.sampler == "davis-harte") {
    // Only y exists on this route; dw is drawn as in the fast Monte Carlo mode.
    GaussianStream stream({c.seed, 0, StreamRole::dh});
    JointPath path;
    path.grid = grid;
    path.seed_info = {c.seed, 0};
    path.y = sample_fou_davis_harte(c.params, grid, stream);
    GaussianStream w({c.seed, 0, StreamRole::dw});
    path.dw.resize(static_cast<std::size_t>(c.n));
    w.fill(path.dw);
    for (double& x : path.dw) x *= std::sqrt(grid.step());
    return path;
  }
  throw ValidationError("sampler must be cholesky or davis-harte (got " + c.sampler + ")");
}

void emit(const ExperimentConfig& c, std::ostream& out) {
  const std::string format = c.format.empty() ? default_format(c.command) : c.format;
  if (format != "csv" && format != "json") {
    throw ValidationError("format must be csv or json (got " + format + ")");
  }
  const bool json = format == "json";
  if (c.command == "constants") {
    const auto theory = theory_constants(c.params);
    const auto k = asymptotic_constants(c.params, 1.0);
    json ? write_json(out, constants_json(theory, k)) : write_constants_csv(out, theory, k);
  } else if (c.command == "kernel") {
    validate(c.params);
    const auto rows = kernel_rows(c);
    json ? write_json(out, kernel_json(rows)) : write_kernel_csv(out, rows);
  } else if (c.command == "sample") {
    validate(c.params);
    const auto path = sample_path(c);
    json ? write_json(out, path_json(path)) : write_path_csv(out, path);
  } else if (c.command == "convergence") {
    validate(c.params);
    McConfig mc;
    mc.n_list = c.n_list;
    mc.fine_factor = c.fine_factor;
    mc.replications = c.replications;
    mc.seed = c.seed;
    mc.mode = parse_mode(c.mode);
    mc.fit_all_points = c.fit_all;
    const auto report = mc_strong_error(c.params, mc);
    json ? write_json(out, report_json(report)) : write_report_csv(out, report);
  } else {
    throw ValidationError("unknown command " + c.command);
  }
}

// Renders to a buffer first so a failure leaves no partial output.
int execute(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.threads > 0) omp_set_num_threads(c.threads);
    std::ostringstream buffer;
    emit(c, buffer);
    if (c.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(c.out, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        err << "error: cannot write " << c.out << '\n';
        return kValidation;
      }
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kQuadrature;
  }
}

}  // namespace

Json to_json(const ExperimentConfig& c) {
  Json j = Json::object();
  j["command"] = c.command;
  j["params"] = {{"hurst", c.params.hurst}, {"lambda", c.params.lambda},
                 {"theta", c.params.theta}, {"mu", c.params.mu},
                 {"rho", c.params.rho},     {"s0", c.params.s0},
                 {"t_final", c.params.t_final}};
  j["n"] = c.n;
  j["n_list"] = c.n_list;
  j["fine_factor"] = c.fine_factor;
  j["replications"] = c.replications;
  j["seed"] = c.seed;
  j["a"] = c.a;
  j["tau_min"] = c.tau_min;
  j["tau_max"] = c.tau_max;
  j["tau_steps"] = c.tau_steps;
  j["sampler"] = c.sampler;
  j["mode"] = c.mode;
  j["format"] = c.format;
  j["out"] = c.out;
  j["threads"] = c.threads;
  j["fit_all"] = c.fit_all;
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    auto get = [&](const Json& obj, const char* key, auto& field) {
      if (obj.contains(key)) field = obj.at(key).get<std::decay_t<decltype(field)>>();
    };
    get(j, "command", c.command);
    if (j.contains("params")) {
      const Json& p = j.at("params");
      get(p, "hurst", c.params.hurst);
      get(p, "lambda", c.params.lambda);
      get(p, "theta", c.params.theta);
      get(p, "mu", c.params.mu);
      get(p, "rho", c.params.rho);
      get(p, "s0", c.params.s0);
      get(p, "t_final", c.params.t_final);
    }
    get(j, "n", c.n);
    get(j, "n_list", c.n_list);
    get(j, "fine_factor", c.fine_factor);
    get(j, "replications", c.replications);
    get(j, "seed", c.seed);
    get(j, "a", c.a);
    get(j, "tau_min", c.tau_min);
    get(j, "tau_max", c.tau_max);
    get(j, "tau_steps", c.tau_steps);
    get(j, "sampler", c.sampler);
    get(j, "mode", c.mode);
    get(j, "format", c.format);
    get(j, "out", c.out);
    get(j, "threads", c.threads);
    get(j, "fit_all", c.fit_all);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad config: ") + e.what());
  }
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rough-volatility simulation and strong-error analysis", "roughvol"};
  app.require_subcommand(1, 1);

  ExperimentConfig flags;
  std::string config_path;
  bool print_config = false;
  // Each applier copies one explicitly given flag onto a config.
  std::vector<std::pair<CLI::Option*, std::function<void(ExperimentConfig&)>>> appliers;

  auto add = [&](CLI::App* sub, const std::string& name, auto ExperimentConfig::*field,
                 const std::string& help) {
    auto* opt = sub->add_option(name, flags.*field, help);
    appliers.emplace_back(opt, [&flags, field](ExperimentConfig& c) { c.*field = flags.*field; });
    return opt;
  };
  auto add_param = [&](CLI::App* sub, const std::string& name, double ModelParams::*field,
                       const std::string& help) {
    auto* opt = sub->add_option(name, flags.params.*field, help);
    appliers.emplace_back(opt, [&flags, field](ExperimentConfig& c) {
      c.params.*field = flags.params.*field;
    });
  };

  for (const char* command : kCommands) {
    CLI::App* sub = app.add_subcommand(command);
    add_param(sub, "--hurst", &ModelParams::hurst, "Hurst index, 0 < H < 1/2");
    add_param(sub, "--lambda", &ModelParams::lambda, "mean-reversion rate");
    add_param(sub, "--theta", &ModelParams::theta, "vol-of-vol");
    add_param(sub, "--mu", &ModelParams::mu, "long-run mean of log-volatility");
    add_param(sub, "--rho", &ModelParams::rho, "leverage correlation");
    add_param(sub, "--s0", &ModelParams::s0, "initial price");
    add_param(sub, "--t-final", &ModelParams::t_final, "horizon T");
    add(sub, "--format", &ExperimentConfig::format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add(sub, "--out", &ExperimentConfig::out, "output file (default: stdout)");
    add(sub, "--threads", &ExperimentConfig::threads, "OpenMP threads (default: all)");
    add(sub, "--seed", &ExperimentConfig::seed, "random seed");
    sub->add_option("--config", config_path, "JSON experiment config; flags override it");
    sub->add_flag("--print-config", print_config, "print the resolved config as JSON and exit");

    const std::string name = command;
    if (name == "kernel") {
      add(sub, "--a", &ExperimentConfig::a, "exponent a in Z = exp(aY)");
      add(sub, "--tau-min", &ExperimentConfig::tau_min, "first lag");
      add(sub, "--tau-max", &ExperimentConfig::tau_max, "last lag");
      add(sub, "--tau-steps", &ExperimentConfig::tau_steps, "number of lags");
    }
    if (name == "sample") {
      add(sub, "--n", &ExperimentConfig::n, "grid steps");
      add(sub, "--sampler", &ExperimentConfig::sampler, "cholesky or davis-harte")
          ->check(CLI::IsMember({"cholesky", "davis-harte"}));
    }
    if (name == "convergence") {
      add(sub, "--n-list", &ExperimentConfig::n_list, "coarse grid sizes")->delimiter(',');
      add(sub, "--fine-factor", &ExperimentConfig::fine_factor, "reference grid refinement");
      add(sub, "--replications", &ExperimentConfig::replications, "Monte Carlo paths");
      add(sub, "--mode", &ExperimentConfig::mode, "fast-rho0 or joint")
          ->check(CLI::IsMember({"fast-rho0", "joint"}));
      add(sub, "--fit-all", &ExperimentConfig::fit_all, "fit the rate on every n");
    }
  }

  std::vector<std::string> argv_store{"roughvol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  ExperimentConfig config;
  try {
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw ValidationError("cannot read config " + config_path);
      Json j;
      try {
        j = Json::parse(file);
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad config: ") + e.what());
      }
      config = config_from_json(j);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  for (const auto& [opt, apply] : appliers) {
    if (opt->count() > 0) apply(config);
  }
  config.command = app.get_subcommands().front()->get_name();

  if (print_config) {
    write_json(out, to_json(config));
    return kOk;
  }
  return execute(config, out, err);
}

}  // namespace roughvol::cli
