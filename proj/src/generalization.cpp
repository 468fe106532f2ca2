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

#include "infosens/generalization.hpp"

#include <cmath>

namespace infosens {

RealizedConfiguration::RealizedConfiguration(InputConfiguration cfg_in,
                                             Vector true_w_in,
                                             std::vector<double> targets_in)
    : cfg(std::move(cfg_in)),
      true_w(std::move(true_w_in)),
      targets(std::move(targets_in)) {
  if (static_cast<Index>(targets.size()) != cfg.n()) {
    throw DimMismatch("one target per training input is required");
  }
  if (true_w.size() != cfg.model.dim()) throw DimMismatch("parameter dimension");
}

RealizedConfiguration realize(const InputConfiguration& cfg, RandomStream& rng) {
  Vector w = sample(cfg.model.prior, rng);
  const double noise_sd = 1.0 / std::sqrt(cfg.model.beta);
  std::vector<double> y;
  y.reserve(cfg.train_inputs.size());
  for (double x : cfg.train_inputs) {
    y.push_back(w.dot(eval(cfg.model.map, x)) + noise_sd * rng.normal());
  }
  return RealizedConfiguration(cfg, std::move(w), std::move(y));
}

double aleatoric_entropy(double beta) { return 0.5 * (kLogTwoPiE - std::log(beta)); }

double bayes_risk_per_config(const InputConfiguration& cfg) {
  const ConfigurationAnalysis a(cfg);
  return 0.5 * (kLogTwoPiE + std::log(a.predictive_variance()));
}

double training_term(const RealizedConfiguration& rc) {
  const auto& model = rc.cfg.model;
  const BlrPosterior post = fit(model, rc.cfg.train_inputs, rc.targets);
  const Matrix phi = design_matrix(model.map, rc.cfg.train_inputs);
  double acc = 0.0;
  for (Index n = 0; n < phi.rows(); ++n) {
    const Vector phi_n = phi.row(n).transpose();
    const double resid = rc.targets[static_cast<std::size_t>(n)] - post.mean.dot(phi_n);
    const double spread = phi_n.dot(post.cov.matrix() * phi_n);
    acc += 0.5 * (kLogTwoPi - std::log(model.beta)) +
           0.5 * model.beta * (resid * resid + spread);
  }
  return acc / static_cast<double>(phi.rows());
}

double kl_posterior_prior(const RealizedConfiguration& rc) {
  const BlrPosterior post = fit(rc.cfg.model, rc.cfg.train_inputs, rc.targets);
  return kl(post.distribution(), rc.cfg.model.prior);
}

double gibbs_risk_per_config(const InputConfiguration& cfg) {
  const ConfigurationAnalysis a(cfg);
  const double spread = a.predictive_variance() - 1.0 / a.beta();
  return 0.5 * (kLogTwoPi - std::log(a.beta())) + 0.5 + a.beta() * spread;
}

double lautum_conditional(const InputConfiguration& cfg) {
  const ConfigurationAnalysis a(cfg);
  const double spread = a.predictive_variance() - 1.0 / a.beta();
  return static_cast<double>(cfg.n()) * a.beta() * spread;
}

GenAudit audit_theorem5(std::span<const RealizedConfiguration> samples,
                        ChainWeighting weighting) {
  const std::size_t k = samples.size();
  std::vector<double> bayes(k), train(k), kl_n(k), sens(k), chain(k), resid(k), gap(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& rc = samples[i];
    const ConfigurationAnalysis a(rc.cfg);
    const auto dec = a.decompose(weighting);
    const auto count = static_cast<double>(rc.cfg.n());
    bayes[i] = 0.5 * (kLogTwoPiE + std::log(a.predictive_variance()));
    train[i] = training_term(rc);
    kl_n[i] = kl_posterior_prior(rc) / count;
    sens[i] = dec.sens_test_sum;
    chain[i] = dec.sens_chain_sum;
    gap[i] = bayes[i] - (train[i] + kl_n[i]);
    resid[i] = gap[i] + sens[i] + chain[i];
  }
  return {summarize(bayes), summarize(train), summarize(kl_n), summarize(sens),
          summarize(chain), summarize(resid), summarize(gap)};
}

JensenAudit jensen_gap_audit(std::span<const InputConfiguration> samples,
                             ChainWeighting weighting) {
  const std::size_t k = samples.size();
  std::vector<double> gap(k), li(k), resid(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& cfg = samples[i];
    const auto count = static_cast<double>(cfg.n());
    const auto dec = decompose(cfg, weighting);
    gap[i] = gibbs_risk_per_config(cfg) - bayes_risk_per_config(cfg);
    li[i] = lautum_conditional(cfg) / count;
    resid[i] = gap[i] - (li[i] + dec.sens_test_sum + dec.sens_chain_sum - dec.mi_over_n);
  }
  return {summarize(gap), summarize(li), summarize(resid)};
}

RegretResult regret_audit(const InputConfiguration& cfg, ChainWeighting weighting) {
  const ConfigurationAnalysis a(cfg);
  const auto& model = cfg.model;
  Matrix cov = model.prior.cov.matrix();
  double regret = 0.0;
  for (Index n = 0; n < a.n(); ++n) {
    const Vector phi_n = a.design().row(n).transpose();
    regret += 0.5 * std::log(model.beta * predictive_variance(cov, model.beta, phi_n));
    absorb_in_place(cov, phi_n, model.beta);
  }
  regret /= static_cast<double>(a.n());
  const auto dec = a.decompose(weighting);
  return {regret, dec.cmi - (regret - dec.sens_test_sum - dec.sens_chain_sum)};
}

}  // namespace infosens
