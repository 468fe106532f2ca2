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

#include "infosens/harness.hpp"

#include <algorithm>
#include <cmath>

#include "infosens/oracle.hpp"
#include "infosens/rng.hpp"

namespace infosens {
namespace {

// Stream families. Changing these changes every generated number.
enum StreamTag : std::uint64_t {
  kInputs = 1,
  kTargets = 2,
  kTaskInputs = 3,
  kOracleSingle = 4,
  kOracleMeta = 5,
};

void add_row(std::vector<SweepRow>& rows, const std::string& mode, int n,
             std::optional<int> m, const std::string& quantity,
             const std::vector<double>& values) {
  rows.push_back({mode, n, m, quantity, summarize(values)});
}

std::uint64_t as_count(int k) { return static_cast<std::uint64_t>(k); }

void require_mode(const ExperimentConfig& cfg, Mode mode) {
  if (cfg.mode != mode) {
    throw ConfigError("driver needs mode " + to_string(mode) + ", config has " +
                      to_string(cfg.mode));
  }
}

}  // namespace

BlrModel single_task_model(const ExperimentConfig& cfg) {
  return BlrModel::isotropic(cfg.alpha, cfg.beta, cfg.feature_map.build());
}

MetaModel meta_model(const ExperimentConfig& cfg) {
  return MetaModel(cfg.alpha, cfg.beta, cfg.gamma, cfg.feature_map.build());
}

ChainWeighting weighting(const ExperimentConfig& cfg) {
  return cfg.chain_multiplicity ? ChainWeighting::kWeighted : ChainWeighting::kUnit;
}

InputConfiguration sample_configuration(const ExperimentConfig& cfg, const BlrModel& model,
                                        int n, std::uint64_t sample) {
  RandomStream rng(cfg.seed, {kInputs, sample});
  const double test = rng.normal();
  std::vector<double> train(static_cast<std::size_t>(n));
  for (double& x : train) x = rng.normal();
  return InputConfiguration(model, std::move(train), test);
}

std::vector<InputConfiguration> sample_configurations(const ExperimentConfig& cfg,
                                                      const BlrModel& model, int n) {
  std::vector<InputConfiguration> out;
  out.reserve(static_cast<std::size_t>(cfg.mc_samples));
  for (int s = 0; s < cfg.mc_samples; ++s) {
    out.push_back(sample_configuration(cfg, model, n, as_count(s)));
  }
  return out;
}

RealizedConfiguration realize_sample(const ExperimentConfig& cfg,
                                     const InputConfiguration& input, std::uint64_t sample) {
  RandomStream rng(cfg.seed, {kTargets, sample});
  return realize(input, rng);
}

MetaConfiguration sample_meta_configuration(const ExperimentConfig& cfg,
                                            const MetaModel& model, int n, int m,
                                            std::uint64_t sample) {
  RandomStream rng(cfg.seed, {kInputs, sample});
  const double test = rng.normal();
  std::vector<double> test_task(static_cast<std::size_t>(n));
  for (double& x : test_task) x = rng.normal();
  std::vector<std::vector<double>> tasks(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    RandomStream task_rng(cfg.seed, {kTaskInputs, sample, as_count(t)});
    auto& inputs = tasks[static_cast<std::size_t>(t)];
    inputs.resize(static_cast<std::size_t>(n));
    for (double& x : inputs) x = task_rng.normal();
  }
  return MetaConfiguration(model, std::move(tasks), std::move(test_task), test);
}

std::vector<SweepRow> run_single_task_sweep(const ExperimentConfig& cfg) {
  require_mode(cfg, Mode::kSingleTask);
  cfg.validate();
  const BlrModel model = single_task_model(cfg);
  const ChainWeighting w = weighting(cfg);
  std::vector<SweepRow> rows;
  const std::string mode = "single_task";
  for (int n : cfg.n_grid) {
    const auto k = static_cast<std::size_t>(cfg.mc_samples);
    std::vector<double> cmi(k), mi(k), sens(k), chain(k), resid(k), lemma1(k), cor2(k);
    for (std::size_t s = 0; s < k; ++s) {
      const auto dec = decompose(sample_configuration(cfg, model, n, s), w);
      cmi[s] = dec.cmi;
      mi[s] = dec.mi_over_n;
      sens[s] = dec.sens_test_sum;
      chain[s] = dec.sens_chain_sum;
      resid[s] = dec.residual;
      lemma1[s] = dec.mi_over_n;
      cor2[s] = dec.mi_over_n - dec.sens_chain_sum;
    }
    add_row(rows, mode, n, std::nullopt, "cmi", cmi);
    add_row(rows, mode, n, std::nullopt, "mi_over_n", mi);
    add_row(rows, mode, n, std::nullopt, "sens_test_sum", sens);
    add_row(rows, mode, n, std::nullopt, "sens_chain_sum", chain);
    add_row(rows, mode, n, std::nullopt, "residual", resid);
    add_row(rows, mode, n, std::nullopt, "bound_lemma1", lemma1);
    add_row(rows, mode, n, std::nullopt, "bound_cor2", cor2);
  }
  return rows;
}

namespace {

void meta_cell(const ExperimentConfig& cfg, const MetaModel& model, const std::string& mode,
               int n, int m, std::vector<SweepRow>& rows) {
  const auto k = static_cast<std::size_t>(cfg.mc_samples);
  std::vector<double> memr(k), within(k), hyper(k), tsens(k), tchain(k), dsens(k), dchain(k),
      resid(k), bound(k), improved(k);
  const ChainWeighting w = weighting(cfg);
  for (std::size_t s = 0; s < k; ++s) {
    const auto dec = decompose_meta(sample_meta_configuration(cfg, model, n, m, s), w);
    memr[s] = dec.memr;
    within[s] = dec.term_within;
    hyper[s] = dec.term_hyper;
    tsens[s] = dec.task_sens_sum;
    tchain[s] = dec.task_chain_sum;
    dsens[s] = dec.data_sens_sum;
    dchain[s] = dec.data_chain_sum;
    resid[s] = dec.residual;
    bound[s] = dec.term_within + dec.term_hyper;
    improved[s] = bound[s] - dec.task_chain_sum - dec.data_chain_sum;
  }
  add_row(rows, mode, n, m, "memr", memr);
  add_row(rows, mode, n, m, "term_within", within);
  add_row(rows, mode, n, m, "term_hyper", hyper);
  add_row(rows, mode, n, m, "task_sens_sum", tsens);
  add_row(rows, mode, n, m, "task_chain_sum", tchain);
  add_row(rows, mode, n, m, "data_sens_sum", dsens);
  add_row(rows, mode, n, m, "data_chain_sum", dchain);
  add_row(rows, mode, n, m, "residual", resid);
  add_row(rows, mode, n, m, "bound_eq22", bound);
  add_row(rows, mode, n, m, "bound_improved", improved);
}

}  // namespace

std::vector<SweepRow> run_meta_sweep(const ExperimentConfig& cfg) {
  require_mode(cfg, Mode::kMeta);
  cfg.validate();
  const MetaModel model = meta_model(cfg);
  std::vector<SweepRow> rows;
  for (int m : cfg.m_grid) meta_cell(cfg, model, "meta_vary_M", cfg.meta_fixed_n, m, rows);
  for (int n : cfg.n_grid) meta_cell(cfg, model, "meta_vary_N", n, cfg.meta_fixed_m, rows);
  return rows;
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto k = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

AsymptoticsReport run_asymptotics_check(const ExperimentConfig& cfg) {
  require_mode(cfg, Mode::kSingleTask);
  cfg.validate();
  const auto& grid = cfg.n_grid;
  if (grid.size() < 3 || grid.back() < 10 * grid.front()) {
    throw InsufficientGrid("asymptotics need at least three N values spanning a decade");
  }
  const BlrModel model = single_task_model(cfg);
  AsymptoticsReport report;
  std::vector<double> log_n, log_sens, log_mi, scaled;
  const std::string mode = "asymptotics";
  for (int n : grid) {
    const auto k = static_cast<std::size_t>(cfg.mc_samples);
    std::vector<double> sens(k), mi(k), nsens(k);
    for (std::size_t s = 0; s < k; ++s) {
      const auto dec = decompose(sample_configuration(cfg, model, n, s), weighting(cfg));
      sens[s] = dec.sens_test_sum;
      mi[s] = dec.mi_over_n;
      nsens[s] = n * dec.sens_test_sum;
    }
    add_row(report.rows, mode, n, std::nullopt, "sens_test_mean", sens);
    add_row(report.rows, mode, n, std::nullopt, "mi_over_n", mi);
    add_row(report.rows, mode, n, std::nullopt, "n_times_sens_test", nsens);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_sens.push_back(std::log(summarize(sens).mean));
    log_mi.push_back(std::log(summarize(mi).mean));
    scaled.push_back(summarize(nsens).mean);
  }
  report.slope_sens = ls_slope(log_n, log_sens);
  report.slope_mi = ls_slope(log_n, log_mi);
  report.tail_decreasing = true;
  for (std::size_t i = scaled.size() / 2; i + 1 < scaled.size(); ++i) {
    if (!(scaled[i + 1] < scaled[i])) report.tail_decreasing = false;
  }
  report.rows.push_back({mode, 0, std::nullopt, "slope_sens_test", {report.slope_sens, 0.0, 1}});
  report.rows.push_back({mode, 0, std::nullopt, "slope_mi_over_n", {report.slope_mi, 0.0, 1}});
  return report;
}

bool AuditReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.pass; });
}

std::vector<SweepRow> AuditReport::rows() const {
  std::vector<SweepRow> out;
  for (const auto& e : entries) {
    out.push_back({"audit", e.n, e.m, "residual_" + e.identity, e.residual});
  }
  return out;
}

namespace {

AuditEntry make_entry(const std::string& identity, int n, std::optional<int> m,
                      const std::vector<double>& residuals) {
  AuditEntry e;
  e.identity = identity;
  e.n = n;
  e.m = m;
  e.residual = summarize(residuals);
  for (double r : residuals) e.max_abs = std::max(e.max_abs, std::abs(r));
  e.exact = e.max_abs < kExactTol;
  e.pass = e.exact || std::abs(e.residual.mean) <= kAuditSe * e.residual.se;
  return e;
}

}  // namespace

AuditReport run_identity_audits(const ExperimentConfig& cfg) {
  require_mode(cfg, Mode::kSingleTask);
  cfg.validate();
  const BlrModel model = single_task_model(cfg);
  const MetaModel mmodel = meta_model(cfg);
  const ChainWeighting w = weighting(cfg);
  AuditReport report;
  for (int n : cfg.n_grid) {
    const auto k = static_cast<std::size_t>(cfg.mc_samples);
    std::vector<InputConfiguration> inputs = sample_configurations(cfg, model, n);
    std::vector<RealizedConfiguration> realized;
    realized.reserve(k);
    std::vector<double> decomp(k), regret(k), jensen(k), bayes(k);
    for (std::size_t s = 0; s < k; ++s) {
      realized.push_back(realize_sample(cfg, inputs[s], s));
      decomp[s] = decompose(inputs[s], w).residual;
      regret[s] = regret_audit(inputs[s], w).residual;
    }
    // Both audits below summarize internally; recompute the per-sample
    // residuals so the exactness flag sees each configuration.
    for (std::size_t s = 0; s < k; ++s) {
      const auto one = std::span<const RealizedConfiguration>(&realized[s], 1);
      bayes[s] = audit_theorem5(one, w).residual.mean;
      const auto cfg_one = std::span<const InputConfiguration>(&inputs[s], 1);
      jensen[s] = jensen_gap_audit(cfg_one, w).residual.mean;
    }
    report.entries.push_back(make_entry("cmi_decomposition", n, std::nullopt, decomp));
    report.entries.push_back(make_entry("bayes_risk", n, std::nullopt, bayes));
    report.entries.push_back(make_entry("jensen_gap", n, std::nullopt, jensen));
    report.entries.push_back(make_entry("regret", n, std::nullopt, regret));
    if (cfg.audit_meta) {
      std::vector<double> meta(k);
      for (std::size_t s = 0; s < k; ++s) {
        meta[s] = decompose_meta(
                      sample_meta_configuration(cfg, mmodel, n, cfg.meta_fixed_m, s), w)
                      .residual;
      }
      report.entries.push_back(make_entry("meta_decomposition", n, cfg.meta_fixed_m, meta));
    }
  }
  return report;
}

BoundsReport run_bounds_sweep(const ExperimentConfig& cfg) {
  require_mode(cfg, Mode::kBounds);
  cfg.validate();
  const BlrModel model = single_task_model(cfg);
  BoundsReport report;
  const std::string mode = "bounds";
  for (int n : cfg.n_grid) {
    std::vector<double> sens, lower, upper, lower_gap, upper_gap, violation;
    for (int s = 0; s < cfg.mc_samples; ++s) {
      const ConfigurationAnalysis a(sample_configuration(cfg, model, n, as_count(s)));
      for (Index i = 0; i < a.n(); ++i) {
        const double value = a.sens_test_point(i);
        const SensitivityBounds b = a.sens_bounds(i);
        const bool bad = value < b.lower - kSandwichSlack || value > b.upper + kSandwichSlack;
        sens.push_back(value);
        lower.push_back(b.lower);
        upper.push_back(b.upper);
        lower_gap.push_back(value - b.lower);
        upper_gap.push_back(b.upper - value);
        violation.push_back(bad ? 1.0 : 0.0);
        ++report.pairs;
        if (bad) ++report.violations;
      }
    }
    add_row(report.rows, mode, n, std::nullopt, "sens_point", sens);
    add_row(report.rows, mode, n, std::nullopt, "bound_lower", lower);
    add_row(report.rows, mode, n, std::nullopt, "bound_upper", upper);
    add_row(report.rows, mode, n, std::nullopt, "lower_gap", lower_gap);
    add_row(report.rows, mode, n, std::nullopt, "upper_gap", upper_gap);
    add_row(report.rows, mode, n, std::nullopt, "violation_rate", violation);
  }
  return report;
}

double OracleReport::worst() const {
  double w = 0.0;
  for (const auto& [name, err] : max_abs_err) w = std::max(w, err);
  return w;
}

std::vector<SweepRow> OracleReport::rows() const {
  std::vector<SweepRow> out;
  for (const auto& [name, err] : max_abs_err) {
    out.push_back({"oracle_check", 0, std::nullopt, "max_abs_err_" + name,
                   {err, 0.0, static_cast<std::size_t>(configs + meta_configs)}});
  }
  return out;
}

namespace {

class ErrorTracker {
 public:
  explicit ErrorTracker(std::map<std::string, double>& sink) : sink_(sink) {}

  void operator()(const std::string& name, double analytic, double reference) {
    double& slot = sink_[name];
    const double err = std::abs(analytic - reference);
    // NaN must not hide behind max()
    slot = std::isnan(err) ? err : std::max(slot, err);
  }

 private:
  std::map<std::string, double>& sink_;
};

FeatureMapSpec random_map(RandomStream& rng, int sample, int max_dim) {
  switch (sample % 3) {
    case 0: {
      const int d = rng.uniform_int(1, max_dim);
      return d == 1 ? make_rbf_grid(1, 0.0, 0.0) : make_rbf_grid(d, -2.0, 2.0);
    }
    case 1: return FeatureMapSpec::polynomial(rng.uniform_int(1, max_dim));
    default: return FeatureMapSpec::constant();
  }
}

double log_uniform(RandomStream& rng, double center) {
  return center * std::exp(rng.uniform(-std::log(4.0), std::log(4.0)));
}

GaussianDist random_prior(RandomStream& rng, Index d, double alpha, bool general) {
  if (!general) return GaussianDist(Vector::Zero(d), SpdMatrix::identity(d, 1.0 / alpha));
  Matrix a(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) a(i, j) = rng.normal() / std::sqrt(static_cast<double>(d));
  }
  Matrix cov = a * a.transpose() + Matrix::Identity(d, d) / alpha;
  return GaussianDist(rng.normal_vector(d), SpdMatrix(cov));
}

std::vector<double> normals(RandomStream& rng, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = rng.normal();
  return v;
}

oracle::Labels without(const oracle::Labels& all, std::size_t skip) {
  oracle::Labels out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i != skip) out.push_back(all[i]);
  }
  return out;
}

oracle::Labels prefix(const oracle::Labels& all, std::size_t count) {
  return oracle::Labels(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
}

void check_single(const InputConfiguration& cfg, ErrorTracker& track) {
  const JointGaussian j = oracle::build_single_task(cfg);
  const oracle::Labels train = oracle::train_labels(cfg.n());
  const oracle::Labels test = {"y_test"};
  const ConfigurationAnalysis a(cfg);
  const auto dec = a.decompose();
  const double n = static_cast<double>(cfg.n());

  track("cmi", a.cmi(), oracle::mi(j, test, {"W"}, train));
  track("mi", a.mi(), oracle::mi(j, {"W"}, train));
  track("bayes_risk", bayes_risk_per_config(cfg), oracle::cond_entropy(j, test, train));
  double sens_sum = 0.0;
  double chain_sum = 0.0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double ref = oracle::mi(j, test, {train[i]}, without(train, i));
    track("sens_test_point", a.sens_test_point(static_cast<Index>(i)), ref);
    sens_sum += ref;
    if (i + 1 < train.size()) {
      const double cref = oracle::mi(j, {train[i + 1]}, {train[i]}, prefix(train, i));
      track("sens_chain_term", a.sens_chain_term(static_cast<Index>(i)), cref);
      chain_sum += static_cast<double>(i + 1) * cref;
    }
  }
  track("sens_test_sum", dec.sens_test_sum, sens_sum / n);
  track("sens_chain_sum", dec.sens_chain_sum, chain_sum / n);
}

void check_meta(const MetaConfiguration& cfg, ErrorTracker& track) {
  const JointGaussian j = oracle::build_meta(cfg);
  const Index count = cfg.num_tasks();
  const Index size = cfg.n();
  const double n = static_cast<double>(size);
  const oracle::Labels train = oracle::train_labels(size);
  const oracle::Labels test = {"y_test"};
  std::vector<oracle::Labels> task;
  oracle::Labels tasks;
  Vector task_values(count * size);
  for (Index m = 0; m < count; ++m) {
    task.push_back(oracle::task_labels(m, size));
    tasks = oracle::concat(tasks, task.back());
    const auto& y = cfg.task_targets[static_cast<std::size_t>(m)];
    for (Index i = 0; i < size; ++i) task_values(m * size + i) = y[static_cast<std::size_t>(i)];
  }
  const oracle::Labels observed = oracle::concat(tasks, train);
  Vector observed_values(observed.size());
  observed_values.head(count * size) = task_values;
  observed_values.tail(size) = Eigen::Map<const Vector>(cfg.test_task_targets.data(), size);

  // Hyper-posterior against U | meta-training targets.
  const HyperPosterior hp = hyper_posterior(cfg);
  const ConditionalGaussian u = condition(j, j.indices({"U"}), j.indices(tasks));
  const GaussianDist u_at = u.at(task_values);
  track("hyper_cov", 0.0, (hp.cov.matrix() - u_at.cov.matrix()).cwiseAbs().maxCoeff());
  track("hyper_mean", 0.0, (hp.mean - u_at.mean).cwiseAbs().maxCoeff());

  // Predictive against y_test | everything observed.
  const GaussianDist pred = condition(j, j.indices(test), j.indices(observed)).at(observed_values);
  const Predictive blr = meta_predictive(cfg);
  const Predictive explicit_path = meta_predictive_explicit(cfg);
  track("meta_predictive_mean", blr.mean, pred.mean(0));
  track("meta_predictive_var", blr.variance, pred.cov.matrix()(0, 0));
  track("meta_explicit_mean", explicit_path.mean, pred.mean(0));
  track("meta_explicit_var", explicit_path.variance, pred.cov.matrix()(0, 0));

  const auto dec = decompose_meta(cfg);
  track("memr", memr_per_config(cfg), oracle::mi(j, test, {"W"}, observed));
  track("memr_decomposition", dec.memr, oracle::mi(j, test, {"W"}, observed));
  track("term_within", dec.term_within, oracle::mi(j, {"W"}, train, {"U"}) / n);
  if (count > 0) {
    track("term_hyper", dec.term_hyper,
          oracle::mi(j, {"U"}, tasks) / (n * static_cast<double>(count)));
  } else {
    track("term_hyper", dec.term_hyper, oracle::mi(j, {"U"}, train) / n);
  }

  const double nm = n * static_cast<double>(count);
  double tsens = 0.0;
  double tchain = 0.0;
  for (Index m = 0; m < count; ++m) {
    oracle::Labels others;
    for (Index k = 0; k < count; ++k) {
      if (k != m) others = oracle::concat(others, task[static_cast<std::size_t>(k)]);
    }
    const double ref = oracle::mi(j, train, task[static_cast<std::size_t>(m)], others);
    track("task_sensitivity", task_sensitivity(cfg, m), ref);
    tsens += ref;
    if (m + 1 < count) {
      oracle::Labels before;
      for (Index k = 0; k < m; ++k) before = oracle::concat(before, task[static_cast<std::size_t>(k)]);
      const double cref = oracle::mi(j, task[static_cast<std::size_t>(m + 1)],
                                     task[static_cast<std::size_t>(m)], before);
      track("task_chain_term", task_chain_term(cfg, m), cref);
      tchain += static_cast<double>(m + 1) * cref;
    }
  }
  if (count > 0) {
    track("task_sens_sum", dec.task_sens_sum, tsens / nm);
    track("task_chain_sum", dec.task_chain_sum, tchain / nm);
  }

  double dsens = 0.0;
  double dchain = 0.0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    dsens += oracle::mi(j, test, {train[i]}, oracle::concat(without(train, i), tasks));
    if (i + 1 < train.size()) {
      dchain += static_cast<double>(i + 1) *
                oracle::mi(j, {train[i + 1]}, {train[i]}, oracle::concat(prefix(train, i), tasks));
    }
  }
  track("data_sens_sum", dec.data_sens_sum, dsens / n);
  track("data_chain_sum", dec.data_chain_sum, dchain / n);
}

}  // namespace

OracleReport oracle_check(const ExperimentConfig& cfg) {
  cfg.validate();
  OracleReport report;
  ErrorTracker track(report.max_abs_err);
  for (int s = 0; s < cfg.oracle_configs; ++s) {
    RandomStream rng(cfg.seed, {kOracleSingle, as_count(s)});
    const FeatureMapSpec map = random_map(rng, s, 5);
    const double alpha = log_uniform(rng, cfg.alpha);
    const double beta = log_uniform(rng, cfg.beta);
    const bool general = rng.uniform_int(0, 1) == 1;
    const GaussianDist prior = random_prior(rng, map.dim(), alpha, general);
    const int n = rng.uniform_int(1, 8);
    std::vector<double> train = normals(rng, n);
    const double test = rng.normal();
    check_single(InputConfiguration(BlrModel(prior, beta, map), std::move(train), test), track);
    ++report.configs;
  }
  for (int s = 0; s < cfg.oracle_configs; ++s) {
    RandomStream rng(cfg.seed, {kOracleMeta, as_count(s)});
    const FeatureMapSpec map = random_map(rng, s, 3);
    const MetaModel model(log_uniform(rng, cfg.alpha), log_uniform(rng, cfg.beta),
                          log_uniform(rng, cfg.gamma), map);
    const int n = rng.uniform_int(1, 4);
    const int m = rng.uniform_int(0, 3);
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> targets;
    for (int t = 0; t < m; ++t) {
      inputs.push_back(normals(rng, n));
      targets.push_back(normals(rng, n));
    }
    std::vector<double> test_task = normals(rng, n);
    std::vector<double> test_targets = normals(rng, n);
    const double test = rng.normal();
    check_meta(MetaConfiguration(model, std::move(inputs), std::move(test_task), test,
                                 std::move(targets), std::move(test_targets)),
               track);
    ++report.meta_configs;
  }
  return report;
}

}  // namespace infosens
