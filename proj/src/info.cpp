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

#include "infosens/info.hpp"

#include <cmath>
#include <sstream>

namespace infosens {
namespace {

void check_point(Index n, Index count, const char* what) {
  if (n < 0 || n >= count) {
    std::ostringstream os;
    os << what << " index " << n << " outside [0, " << count << ")";
    throw std::out_of_range(os.str());
  }
}

}  // namespace

InputConfiguration::InputConfiguration(BlrModel model_in,
                                       std::vector<double> train_inputs_in,
                                       double test_input_in)
    : model(std::move(model_in)),
      train_inputs(std::move(train_inputs_in)),
      test_input(test_input_in) {
  if (train_inputs.empty()) {
    throw std::invalid_argument("a configuration needs at least one training input");
  }
}

ConfigurationAnalysis::ConfigurationAnalysis(const InputConfiguration& cfg)
    : prior_cov_(cfg.model.prior.cov),
      beta_(cfg.model.beta),
      phi_(design_matrix(cfg.model.map, cfg.train_inputs)),
      phi_test_(eval(cfg.model.map, cfg.test_input)),
      post_cov_(posterior_covariance(prior_cov_, beta_, phi_)),
      test_var_(infosens::predictive_variance(post_cov_.matrix(), beta_, phi_test_)) {}

double ConfigurationAnalysis::prior_predictive_variance() const {
  return infosens::predictive_variance(prior_cov_.matrix(), beta_, phi_test_);
}

double ConfigurationAnalysis::cmi() const { return 0.5 * std::log(beta_ * test_var_); }

double ConfigurationAnalysis::mi() const {
  return 0.5 * (prior_cov_.logdet() - post_cov_.logdet());
}

double ConfigurationAnalysis::sens_test_point(Index n) const {
  check_point(n, this->n(), "test sensitivity");
  const Vector phi_n = phi_.row(n).transpose();
  const double increase =
      loo_variance_increase(post_cov_.matrix(), beta_, phi_test_, phi_n);
  return 0.5 * std::log1p(increase / test_var_);
}

double ConfigurationAnalysis::sens_chain_term(Index n) const {
  check_point(n, this->n() - 1, "chain term");
  const Matrix before =
      n == 0 ? prior_cov_.matrix()
             : posterior_covariance(prior_cov_, beta_, phi_.topRows(n)).matrix();
  const Vector phi_n = phi_.row(n).transpose();
  const Vector phi_next = phi_.row(n + 1).transpose();
  const double var_before = infosens::predictive_variance(before, beta_, phi_next);
  const double cross = phi_next.dot(before * phi_n);
  const double drop = cross * cross / infosens::predictive_variance(before, beta_, phi_n);
  return -0.5 * std::log1p(-drop / var_before);
}

std::vector<double> ConfigurationAnalysis::chain_terms() const {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(std::max<Index>(n() - 1, 0)));
  Matrix cov = prior_cov_.matrix();
  for (Index j = 0; j + 1 < n(); ++j) {
    const Vector phi_j = phi_.row(j).transpose();
    const Vector phi_next = phi_.row(j + 1).transpose();
    const Vector s_phi = cov * phi_j;
    const double var_j = 1.0 / beta_ + phi_j.dot(s_phi);
    const double var_next = infosens::predictive_variance(cov, beta_, phi_next);
    const double cross = phi_next.dot(s_phi);
    terms.push_back(-0.5 * std::log1p(-(cross * cross / var_j) / var_next));
    absorb_in_place(cov, phi_j, beta_);
  }
  return terms;
}

double ConfigurationAnalysis::omega(Index n) const {
  check_point(n, this->n(), "omega");
  const Vector phi_n = phi_.row(n).transpose();
  return 1.0 / beta_ - phi_n.dot(post_cov_.matrix() * phi_n);
}

SensitivityBounds ConfigurationAnalysis::sens_bounds(Index n) const {
  const double w = omega(n);
  if (!(w > kOmegaFloor)) {
    std::ostringstream os;
    os << "omega = " << w << " is at or below the floor " << kOmegaFloor;
    throw DegenerateDowndate(os.str());
  }
  const double c = phi_test_.dot(post_cov_.matrix() * phi_.row(n).transpose());
  const double numer = c * c / (2.0 * w);
  return {numer / prior_predictive_variance(), numer / test_var_};
}

InfoDecomposition ConfigurationAnalysis::decompose(ChainWeighting weighting) const {
  InfoDecomposition out;
  const auto count = static_cast<double>(n());
  out.cmi = cmi();
  out.mi_over_n = mi() / count;
  out.per_point_sens.resize(static_cast<std::size_t>(n()));
  double sens = 0.0;
  for (Index i = 0; i < n(); ++i) {
    out.per_point_sens[static_cast<std::size_t>(i)] = sens_test_point(i);
    sens += out.per_point_sens[static_cast<std::size_t>(i)];
  }
  out.chain_terms = chain_terms();
  double chain = 0.0;
  for (std::size_t j = 0; j < out.chain_terms.size(); ++j) {
    const double weight =
        weighting == ChainWeighting::kWeighted ? static_cast<double>(j + 1) : 1.0;
    chain += weight * out.chain_terms[j];
  }
  out.sens_test_sum = sens / count;
  out.sens_chain_sum = chain / count;
  out.residual = out.cmi - (out.mi_over_n - out.sens_test_sum - out.sens_chain_sum);
  return out;
}

double cmi_per_config(const InputConfiguration& cfg) {
  return ConfigurationAnalysis(cfg).cmi();
}

double mi_per_config(const InputConfiguration& cfg) {
  return ConfigurationAnalysis(cfg).mi();
}

double sens_test_point(const InputConfiguration& cfg, Index n) {
  return ConfigurationAnalysis(cfg).sens_test_point(n);
}

double sens_chain_term(const InputConfiguration& cfg, Index n) {
  return ConfigurationAnalysis(cfg).sens_chain_term(n);
}

InfoDecomposition decompose(const InputConfiguration& cfg, ChainWeighting weighting) {
  return ConfigurationAnalysis(cfg).decompose(weighting);
}

double bound_lemma1(const InputConfiguration& cfg) {
  return mi_per_config(cfg) / static_cast<double>(cfg.n());
}

double bound_cor2(const InputConfiguration& cfg) {
  const auto d = decompose(cfg);
  return d.mi_over_n - d.sens_chain_sum;
}

SensitivityBounds sens_bounds_thm2(const InputConfiguration& cfg, Index n) {
  return ConfigurationAnalysis(cfg).sens_bounds(n);
}

double mer_subgaussian_bound(double sigma2, double cmi) {
  if (!(sigma2 > 0.0)) throw NegativeInput("sub-Gaussian parameter must be > 0");
  if (cmi < 0.0) throw NegativeInput("conditional mutual information must be >= 0");
  return std::sqrt(2.0 * sigma2 * cmi);
}

}  // namespace infosens
