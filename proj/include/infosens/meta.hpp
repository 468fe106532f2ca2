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

// Hierarchical Gaussian meta-learning. Task parameters are drawn around a
// shared hyper-parameter, W_m | U ~ N(U, alpha^{-1} I), U ~ N(0, gamma^{-1} I),
// and the meta-test task is one more draw from the same environment.

#ifndef INFOSENS_META_HPP_
#define INFOSENS_META_HPP_

#include <vector>

#include "infosens/blr.hpp"
#include "infosens/info.hpp"

namespace infosens {

struct MetaModel {
  MetaModel(double alpha_in, double beta_in, double gamma_in, FeatureMapSpec map_in);

  Index dim() const { return map.dim(); }

  double alpha;
  double beta;
  double gamma;
  FeatureMapSpec map;
};

/// M meta-training tasks with N points each, the meta-test task's N training
/// points and a test input. Targets are optional: information quantities only
/// depend on inputs. When given, there must be one per input.
struct MetaConfiguration {
  MetaConfiguration(MetaModel model_in,
                    std::vector<std::vector<double>> task_inputs_in,
                    std::vector<double> test_task_inputs_in, double test_input_in,
                    std::vector<std::vector<double>> task_targets_in = {},
                    std::vector<double> test_task_targets_in = {});

  Index num_tasks() const { return static_cast<Index>(task_inputs.size()); }
  Index n() const { return static_cast<Index>(test_task_inputs.size()); }
  bool has_targets() const { return !task_targets.empty() || num_tasks() == 0; }

  MetaModel model;
  std::vector<std::vector<double>> task_inputs;
  std::vector<double> test_task_inputs;
  double test_input;
  std::vector<std::vector<double>> task_targets;
  std::vector<double> test_task_targets;
};

struct HyperPosterior {
  Vector mean;
  SpdMatrix cov;
};

/// Posterior of U given the meta-training tasks:
///   S_u^{-1} = gamma I + sum_m Phi_m^T s_m Phi_m,  m_u = S_u sum_m Phi_m^T s_m y_m,
/// with s_m = (beta^{-1} I + alpha^{-1} Phi_m Phi_m^T)^{-1}. Without targets
/// the mean is left at zero.
HyperPosterior hyper_posterior(const MetaConfiguration& cfg);

/// Same as above restricted to the tasks whose indices are listed.
HyperPosterior hyper_posterior(const MetaConfiguration& cfg,
                               const std::vector<Index>& tasks);

/// Posterior of a task parameter given U and that task's data; the prior is
/// N(U, alpha^{-1} I).
BlrPosterior task_posterior(const MetaModel& model, const Vector& u,
                            std::span<const double> inputs,
                            std::span<const double> targets);

/// Single-task model seen by the meta-test task once U is integrated out
/// against the hyper-posterior: prior N(m_u, alpha^{-1} I + S_u).
BlrModel meta_test_model(const MetaConfiguration& cfg);

/// Posterior predictive at the test input, as the conjugate fit under
/// meta_test_model.
Predictive meta_predictive(const MetaConfiguration& cfg);

/// The same predictive assembled from the task posterior given U and a
/// hyper-posterior that also absorbs the meta-test task's data:
///   S_f = beta^{-1} + phi^T S_t phi + (alpha S_t phi)^T S_u' (alpha S_t phi).
Predictive meta_predictive_explicit(const MetaConfiguration& cfg);

/// 1/2 ln(beta S_f(x)).
double memr_per_config(const MetaConfiguration& cfg);

/// Covariance log-determinant of the targets of a task with design phi,
/// given the meta-training tasks in `given`.
double task_target_logdet(const MetaConfiguration& cfg, const Matrix& phi,
                          const std::vector<Index>& given);

/// 1/2 [ln det Sigma_{\m} - ln det Sigma_full] for the meta-test targets.
double task_sensitivity(const MetaConfiguration& cfg, Index m);

/// I(Z^{(m+1)}; Z^{(m)} | Z^{(0..m-1)}), pairs indexed from zero.
double task_chain_term(const MetaConfiguration& cfg, Index m);

struct MetaDecomposition {
  double memr = 0.0;
  double term_within = 0.0;     // I(W; Z^N | U) / N
  double term_hyper = 0.0;      // I(U; Z^{NM}) / (NM)
  double task_sens_sum = 0.0;   // (1/NM) sum_m task_sensitivity
  double task_chain_sum = 0.0;  // (1/NM) sum_m m task_chain_term
  double data_sens_sum = 0.0;
  double data_chain_sum = 0.0;
  double residual = 0.0;
};

/// With no meta-training tasks term_hyper is I(U; Z^N)/N, so the identity
/// collapses to the single-task one with prior variance 1/alpha + 1/gamma.
MetaDecomposition decompose_meta(const MetaConfiguration& cfg,
                                 ChainWeighting weighting = ChainWeighting::kWeighted);

/// term_within + term_hyper.
double bound_eq22(const MetaConfiguration& cfg);
/// bound_eq22 minus the task and data chain sums.
double bound_meta_improved(const MetaConfiguration& cfg);

}  // namespace infosens

#endif  // INFOSENS_META_HPP_
