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

// Per-configuration information quantities of single-task Bayesian linear
// regression. A configuration fixes the training inputs x_1..x_N and the
// test input x; every quantity here is an information measure between
// targets conditioned on those inputs, so none of them depend on target
// values. Expectations over input draws are formed by the harness.
//
// With sigma^2_S(x) the predictive variance after absorbing the index set S:
//
//   CMI             I(W; y | y^N)               = 1/2 ln(beta sigma^2_N(x))
//   MI              I(W; y^N)                   = 1/2 ln det S0 - 1/2 ln det S_N
//   test sensitivity I(y; y_n | y^{N\n})        = 1/2 ln sigma^2_{N\n}(x) / sigma^2_N(x)
//   chain term      I(y_{n+1}; y_n | y^{n-1})   = 1/2 ln sigma^2_{<n}(x_{n+1}) / sigma^2_{<=n}(x_{n+1})
//
// and, in expectation over inputs,
//
//   CMI = MI/N - (1/N) sum_n I_n - (1/N) sum_n n I_{n+1,n}.

#ifndef INFOSENS_INFO_HPP_
#define INFOSENS_INFO_HPP_

#include <vector>

#include "infosens/blr.hpp"

namespace infosens {

struct InputConfiguration {
  InputConfiguration(BlrModel model_in, std::vector<double> train_inputs_in,
                     double test_input_in);

  Index n() const { return static_cast<Index>(train_inputs.size()); }

  BlrModel model;
  std::vector<double> train_inputs;
  double test_input;
};

/// How the chain terms enter the CMI decomposition. kUnit drops the
/// multiplicity and exists only as a negative control for the audits.
enum class ChainWeighting { kWeighted, kUnit };

struct InfoDecomposition {
  double cmi = 0.0;
  double mi_over_n = 0.0;
  double sens_test_sum = 0.0;   // (1/N) sum_n I_n
  double sens_chain_sum = 0.0;  // (1/N) sum_n n I_{n+1,n}
  double residual = 0.0;        // cmi - (mi_over_n - sens_test_sum - sens_chain_sum)
  std::vector<double> per_point_sens;
  // Unweighted chain terms; entry n pairs points n and n+1 and carries
  // weight n + 1 in sens_chain_sum.
  std::vector<double> chain_terms;
};

struct SensitivityBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Caches the design matrix, the posterior covariance and the test features
/// of one configuration so that the O(N) leave-one-out and chain evaluations
/// each cost O(d^2).
///
/// Point indices are zero-based: sens_test_point(n) for n in [0, N) and
/// sens_chain_term(n), pairing points n and n+1, for n in [0, N-1).
class ConfigurationAnalysis {
 public:
  explicit ConfigurationAnalysis(const InputConfiguration& cfg);

  Index n() const { return phi_.rows(); }
  double beta() const { return beta_; }
  const Matrix& design() const { return phi_; }
  const Vector& test_features() const { return phi_test_; }
  const Matrix& posterior_cov() const { return post_cov_.matrix(); }

  double predictive_variance() const { return test_var_; }
  double prior_predictive_variance() const;
  double cmi() const;
  double mi() const;
  double sens_test_point(Index n) const;
  double sens_chain_term(Index n) const;
  double omega(Index n) const;
  SensitivityBounds sens_bounds(Index n) const;

  InfoDecomposition decompose(ChainWeighting weighting = ChainWeighting::kWeighted) const;

 private:
  std::vector<double> chain_terms() const;

  SpdMatrix prior_cov_;
  double beta_;
  Matrix phi_;
  Vector phi_test_;
  SpdMatrix post_cov_;
  double test_var_;
};

double cmi_per_config(const InputConfiguration& cfg);
double mi_per_config(const InputConfiguration& cfg);
double sens_test_point(const InputConfiguration& cfg, Index n);
double sens_chain_term(const InputConfiguration& cfg, Index n);
InfoDecomposition decompose(const InputConfiguration& cfg,
                            ChainWeighting weighting = ChainWeighting::kWeighted);

/// MI / N, the classical upper bound on the CMI.
double bound_lemma1(const InputConfiguration& cfg);
/// MI / N minus the weighted chain sum; never looser than bound_lemma1.
double bound_cor2(const InputConfiguration& cfg);

/// Closed-form sandwich on the test sensitivity of point n:
///   lower = c^2 / (2 omega (phi^T S0 phi + 1/beta))
///   upper = c^2 / (2 omega (1/beta + phi^T S_N phi)),   c = phi^T S_N phi_n.
SensitivityBounds sens_bounds_thm2(const InputConfiguration& cfg, Index n);

/// sqrt(2 sigma2 cmi), the excess-risk bound for sigma2-sub-Gaussian losses.
double mer_subgaussian_bound(double sigma2, double cmi);

}  // namespace infosens

#endif  // INFOSENS_INFO_HPP_
