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

// Generalization-error identities under log loss for conjugate linear
// regression: Bayes risk vs training error plus KL, Gibbs risk and the
// conditional Lautum information, the Jensen gap, and the average regret of
// sequential prediction.

#ifndef INFOSENS_GENERALIZATION_HPP_
#define INFOSENS_GENERALIZATION_HPP_

#include <span>
#include <vector>

#include "infosens/info.hpp"
#include "infosens/rng.hpp"
#include "infosens/stats.hpp"

namespace infosens {

/// A configuration together with a parameter draw and targets generated
/// from it.
struct RealizedConfiguration {
  RealizedConfiguration(InputConfiguration cfg_in, Vector true_w_in,
                        std::vector<double> targets_in);

  InputConfiguration cfg;
  Vector true_w;
  std::vector<double> targets;
};

/// Draws W from the prior, then y_n ~ N(W^T phi(x_n), 1/beta).
RealizedConfiguration realize(const InputConfiguration& cfg, RandomStream& rng);

/// Entropy of the posterior predictive at the test input,
/// 1/2 ln(2 pi e sigma^2_N(x)).
double bayes_risk_per_config(const InputConfiguration& cfg);

/// Posterior-averaged training log loss
///   (1/N) sum_n [1/2 ln(2 pi / beta) + beta/2 ((y_n - m^T phi_n)^2 + phi_n^T S phi_n)].
double training_term(const RealizedConfiguration& rc);

/// KL(p(w | data) || p(w)).
double kl_posterior_prior(const RealizedConfiguration& rc);

/// Test log loss of one posterior sample instead of the predictive mixture:
///   1/2 ln(2 pi / beta) + 1/2 + beta phi^T S_N phi.
double gibbs_risk_per_config(const InputConfiguration& cfg);

/// Entropy of the noise, 1/2 ln(2 pi e / beta).
double aleatoric_entropy(double beta);

/// N (gibbs_risk - aleatoric_entropy) = N beta phi^T S_N phi: the Lautum
/// term in the Gibbs-risk identity evaluated at the test input.
double lautum_conditional(const InputConfiguration& cfg);

struct GenAudit {
  MeanSe bayes_risk;
  MeanSe training_term;
  MeanSe kl_over_n;
  MeanSe sens_test_sum;
  MeanSe sens_chain_sum;
  // bayes_risk - (training_term + kl_over_n - sens_test_sum - sens_chain_sum)
  MeanSe residual;
  // bayes_risk - (training_term + kl_over_n), at most 0 in expectation
  MeanSe pac_gap;
};

/// Shared-sample audit of
///   Bayes risk = training term + KL/N - (1/N) sum I_n - (1/N) sum n I_{n+1,n}.
GenAudit audit_theorem5(std::span<const RealizedConfiguration> samples,
                        ChainWeighting weighting = ChainWeighting::kWeighted);

struct JensenAudit {
  MeanSe gap;          // gibbs - bayes
  MeanSe lautum_over_n;
  MeanSe residual;     // gap - (LI/N + sens_test_sum + sens_chain_sum - MI/N)
};

/// Shared-sample audit of the Jensen-gap characterization.
JensenAudit jensen_gap_audit(std::span<const InputConfiguration> samples,
                             ChainWeighting weighting = ChainWeighting::kWeighted);

struct RegretResult {
  double regret = 0.0;    // (1/N) sum_n 1/2 ln(beta sigma^2_{<n}(x_n))
  double residual = 0.0;  // cmi - (regret - sens_test_sum - sens_chain_sum)
};

RegretResult regret_audit(const InputConfiguration& cfg,
                          ChainWeighting weighting = ChainWeighting::kWeighted);

}  // namespace infosens

#endif  // INFOSENS_GENERALIZATION_HPP_
