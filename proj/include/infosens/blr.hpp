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

// Conjugate Bayesian linear regression y = w^T phi(x) + eps with
// eps ~ N(0, 1/beta) and an arbitrary Gaussian prior N(m0, S0) on w.

#ifndef INFOSENS_BLR_HPP_
#define INFOSENS_BLR_HPP_

#include <span>

#include "infosens/feature_map.hpp"
#include "infosens/gaussian.hpp"

namespace infosens {

/// omega(x) at or below this value makes a downdate degenerate.
inline constexpr double kOmegaFloor = 1e-12;

struct BlrModel {
  BlrModel(GaussianDist prior_in, double beta_in, FeatureMapSpec map_in);

  /// Zero-mean isotropic prior N(0, alpha^{-1} I).
  static BlrModel isotropic(double alpha, double beta, FeatureMapSpec map);

  Index dim() const { return prior.dim(); }

  GaussianDist prior;
  double beta;
  FeatureMapSpec map;
};

/// p(w | z^N) = N(mean, cov). The covariance never depends on the targets.
struct BlrPosterior {
  Vector mean;
  SpdMatrix cov;
  Index n_obs = 0;

  GaussianDist distribution() const { return GaussianDist(mean, cov); }
};

struct Predictive {
  double mean;
  double variance;
};

/// The prior viewed as a posterior over zero observations.
BlrPosterior prior_posterior(const BlrModel& model);

/// S^{-1} = S0^{-1} + beta Phi^T Phi,  m = S (S0^{-1} m0 + beta Phi^T y).
BlrPosterior fit(const BlrModel& model, std::span<const double> inputs,
                 std::span<const double> targets);
BlrPosterior fit_features(const GaussianDist& prior, double beta,
                          const Matrix& phi, const Vector& targets);

/// Posterior covariance for a design matrix; targets are not needed.
SpdMatrix posterior_covariance(const SpdMatrix& prior_cov, double beta,
                               const Matrix& phi);

/// Absorbs one observation (Sherman-Morrison, O(d^2)).
BlrPosterior update(const BlrPosterior& post, const Vector& phi, double y,
                    double beta);

/// Removes an absorbed observation (Woodbury, O(d^2)):
///   S_{N-1} = S_N + S_N phi phi^T S_N / omega,  omega = 1/beta - phi^T S_N phi.
/// Throws DegenerateDowndate when omega <= kOmegaFloor.
BlrPosterior downdate(const BlrPosterior& post, const Vector& phi, double y,
                      double beta);

/// 1/beta - phi^T S phi. Positive for every absorbed input; may be <= 0 for
/// inputs that were never observed.
double omega(const BlrPosterior& post, double beta, const Vector& phi);

Predictive predictive(const BlrPosterior& post, double beta, const Vector& phi);
Predictive predictive(const BlrModel& model, const BlrPosterior& post, double x);

// Covariance-only kernels used by the hot loops of the information layer.
// They take and return plain symmetric matrices and skip re-factorization.
double predictive_variance(const Matrix& cov, double beta, const Vector& phi);
void absorb_in_place(Matrix& cov, const Vector& phi, double beta);
/// Increase of the predictive variance at phi_test caused by removing the
/// absorbed input phi_removed: (phi_test^T S phi_removed)^2 / omega.
double loo_variance_increase(const Matrix& cov, double beta,
                             const Vector& phi_test, const Vector& phi_removed);
/// Predictive variance at phi_test after removing phi_removed from cov.
double loo_predictive_variance(const Matrix& cov, double beta,
                               const Vector& phi_test, const Vector& phi_removed);

}  // namespace infosens

#endif  // INFOSENS_BLR_HPP_
