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

// Seeded Monte-Carlo drivers. Every sample index owns its own random stream
// derived from the root seed, so results do not depend on evaluation order.
// The stream of a sample draws the test input first and then the training
// inputs in order, which makes the configuration at a smaller N a prefix of
// the one at a larger N; meta-training tasks get one stream each. Cells of a
// sweep therefore share common random numbers and trends are not masked by
// independent noise.

#ifndef INFOSENS_HARNESS_HPP_
#define INFOSENS_HARNESS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infosens/config.hpp"
#include "infosens/generalization.hpp"
#include "infosens/meta.hpp"
#include "infosens/stats.hpp"

namespace infosens {

// Monte-Carlo identities pass within this many standard errors.
inline constexpr double kAuditSe = 3.0;
// Per-configuration residuals below this count as exact.
inline constexpr double kExactTol = 1e-12;
// Analytic value against the joint-Gaussian oracle, absolute.
inline constexpr double kOracleTol = 1e-8;
// Allowed slack in lower <= I_n <= upper.
inline constexpr double kSandwichSlack = 1e-12;

struct SweepRow {
  std::string mode;
  int n = 0;
  std::optional<int> m;
  std::string quantity;
  MeanSe value;
};

BlrModel single_task_model(const ExperimentConfig& cfg);
MetaModel meta_model(const ExperimentConfig& cfg);

InputConfiguration sample_configuration(const ExperimentConfig& cfg, const BlrModel& model,
                                        int n, std::uint64_t sample);
std::vector<InputConfiguration> sample_configurations(const ExperimentConfig& cfg,
                                                      const BlrModel& model, int n);
/// Draws W from the prior and then the targets; the target stream is nested
/// across N as well.
RealizedConfiguration realize_sample(const ExperimentConfig& cfg,
                                     const InputConfiguration& input, std::uint64_t sample);
/// The meta-test task reuses the single-task stream of the same sample.
MetaConfiguration sample_meta_configuration(const ExperimentConfig& cfg,
                                            const MetaModel& model, int n, int m,
                                            std::uint64_t sample);

ChainWeighting weighting(const ExperimentConfig& cfg);

/// For each N: CMI, MI/N, both sensitivity sums, the residual and the two
/// upper bounds.
std::vector<SweepRow> run_single_task_sweep(const ExperimentConfig& cfg);

/// M varies at meta_fixed_N (mode "meta_vary_M"), then N varies at
/// meta_fixed_M ("meta_vary_N").
std::vector<SweepRow> run_meta_sweep(const ExperimentConfig& cfg);

struct AsymptoticsReport {
  std::vector<SweepRow> rows;
  double slope_sens = 0.0;  // d ln(mean I_n) / d ln N
  double slope_mi = 0.0;    // d ln(MI/N) / d ln N
  bool tail_decreasing = false;

  bool pass() const { return tail_decreasing && slope_sens < slope_mi - 0.1; }
};

/// Needs at least three grid points spanning a decade; throws
/// InsufficientGrid otherwise. The tail is the upper half of the grid.
AsymptoticsReport run_asymptotics_check(const ExperimentConfig& cfg);

struct AuditEntry {
  std::string identity;
  int n = 0;
  std::optional<int> m;
  MeanSe residual;
  double max_abs = 0.0;
  bool exact = false;
  bool pass = false;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  bool all_pass() const;
  std::vector<SweepRow> rows() const;
};

/// Residual of each identity on shared samples, for every N in N_grid:
/// "cmi_decomposition", "bayes_risk", "jensen_gap", "regret", and with
/// audit_meta "meta_decomposition" at M = meta_fixed_M.
AuditReport run_identity_audits(const ExperimentConfig& cfg);

struct BoundsReport {
  std::vector<SweepRow> rows;
  long long pairs = 0;
  long long violations = 0;
};

/// I_n against its lower and upper envelope for every (configuration, n).
BoundsReport run_bounds_sweep(const ExperimentConfig& cfg);

struct OracleReport {
  int configs = 0;
  int meta_configs = 0;
  std::map<std::string, double> max_abs_err;

  double worst() const;
  bool pass() const { return worst() <= kOracleTol; }
  std::vector<SweepRow> rows() const;
};

/// Compares every analytic quantity with the joint-Gaussian oracle on
/// oracle_configs random single-task configurations (d <= 5, N <= 8) and as
/// many meta configurations (d <= 3, N <= 4, M <= 3). Precisions are drawn
/// log-uniformly within a factor 4 of the configured ones.
OracleReport oracle_check(const ExperimentConfig& cfg);

}  // namespace infosens

#endif  // INFOSENS_HARNESS_HPP_
