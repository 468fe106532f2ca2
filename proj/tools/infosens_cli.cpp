// Copyright 2026 The Infosens Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the sweeps and audits.
//
// Exit codes: 0 success, 1 I/O error, 2 configuration error, 3 numerical
// failure, 4 audit failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "infosens/config.hpp"
#include "infosens/emit.hpp"
#include "infosens/errors.hpp"
#include "infosens/harness.hpp"

namespace {

using namespace infosens;

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitAudit = 4;

struct Options {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  std::string format = "csv";
  bool quiet = false;
};

ExperimentConfig resolve(const Options& opt, Mode mode) {
  ExperimentConfig cfg = opt.config_path.empty() ? ExperimentConfig{} : load_config(opt.config_path);
  if (cfg.mode_given && cfg.mode != mode) {
    throw ConfigError("config mode '" + to_string(cfg.mode) + "' does not fit this subcommand (" +
                      to_string(mode) + ")");
  }
  cfg.mode = mode;
  if (opt.seed_given) cfg.seed = opt.seed;
  cfg.validate();
  return cfg;
}

void note(const Options& opt, const std::string& line) {
  if (!opt.quiet) std::cerr << line << '\n';
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

int run(const std::string& command, const Options& opt) {
  const OutputFormat format = format_from_string(opt.format);
  auto out = [&](const ExperimentConfig& cfg, const std::vector<SweepRow>& rows) {
    emit(rows, opt.out, format, {cfg.seed, cfg.mc_samples});
  };

  if (command == "decompose") {
    const auto cfg = resolve(opt, Mode::kSingleTask);
    out(cfg, run_single_task_sweep(cfg));
    return 0;
  }
  if (command == "meta") {
    const auto cfg = resolve(opt, Mode::kMeta);
    out(cfg, run_meta_sweep(cfg));
    return 0;
  }
  if (command == "asymptotics") {
    const auto cfg = resolve(opt, Mode::kSingleTask);
    const auto report = run_asymptotics_check(cfg);
    out(cfg, report.rows);
    note(opt, fmt("slope I_n %.4f, slope MI/N %.4f", report.slope_sens, report.slope_mi));
    note(opt, std::string("N * I_n decreasing over tail: ") +
                  (report.tail_decreasing ? "yes" : "no"));
    return report.pass() ? 0 : kExitAudit;
  }
  if (command == "audit") {
    const auto cfg = resolve(opt, Mode::kSingleTask);
    const auto report = run_identity_audits(cfg);
    out(cfg, report.rows());
    for (const auto& e : report.entries) {
      const char* status = e.exact ? "exact" : (e.pass ? "ok" : "FAIL");
      note(opt, e.identity + " N=" + std::to_string(e.n) +
                    (e.m ? " M=" + std::to_string(*e.m) : std::string()) + " " +
                    fmt("residual %.3e se %.3e", e.residual.mean, e.residual.se) + " " + status);
    }
    return report.all_pass() ? 0 : kExitAudit;
  }
  if (command == "oracle-check") {
    const auto cfg = resolve(opt, Mode::kOracleCheck);
    const auto report = oracle_check(cfg);
    out(cfg, report.rows());
    note(opt, fmt("%g single-task and %g meta configurations, worst error %.3e",
                  report.configs, report.meta_configs, report.worst()));
    return report.pass() ? 0 : kExitAudit;
  }
  if (command == "bounds") {
    const auto cfg = resolve(opt, Mode::kBounds);
    const auto report = run_bounds_sweep(cfg);
    out(cfg, report.rows);
    note(opt, fmt("%g of %g (configuration, n) pairs outside the envelope",
                  static_cast<double>(report.violations), static_cast<double>(report.pairs)));
    return report.violations == 0 ? 0 : kExitAudit;
  }
  throw ConfigError("unknown subcommand " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-theoretic sensitivity analysis for Bayesian linear regression"};
  app.require_subcommand(1);
  Options opt;

  const std::pair<const char*, const char*> commands[] = {
      {"decompose", "single-task decomposition sweep over N"},
      {"meta", "meta-learning sweeps over M and N"},
      {"asymptotics", "decay rates of the sensitivity and MI/N"},
      {"audit", "Monte-Carlo audit of the exact identities"},
      {"oracle-check", "compare analytic values against the joint-Gaussian oracle"},
      {"bounds", "sensitivity against its lower and upper envelopes"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config_path, "JSON experiment config")->check(CLI::ExistingFile);
    sub->add_option_function<std::uint64_t>(
        "--seed", [&opt](const std::uint64_t& s) { opt.seed = s; opt.seed_given = true; },
        "root seed (overrides the config)");
    sub->add_option("--out", opt.out, "output path, stdout when omitted");
    sub->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--quiet", opt.quiet, "suppress the summary on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
