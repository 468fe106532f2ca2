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

#include "infosens/blr.hpp"

#include <sstream>

namespace infosens {
namespace {

void require_positive_beta(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("observation precision must be > 0");
}

double checked_omega(const Matrix& cov, double beta, const Vector& phi) {
  const double w = 1.0 / beta - phi.dot(cov * phi);
  if (!(w > kOmegaFloor)) {
    std::ostringstream os;
    os << "omega = " << w << " is at or below the floor " << kOmegaFloor;
    throw DegenerateDowndate(os.str());
  }
  return w;
}

}  // namespace

BlrModel::BlrModel(GaussianDist prior_in, double beta_in, FeatureMapSpec map_in)
    : prior(std::move(prior_in)), beta(beta_in), map(std::move(map_in)) {
  require_positive_beta(beta);
  if (prior.dim() != map.dim()) {
    throw DimMismatch("prior dimension differs from feature dimension");
  }
}

BlrModel BlrModel::isotropic(double alpha, double beta, FeatureMapSpec map) {
  if (!(alpha > 0.0)) throw std::invalid_argument("prior precision must be > 0");
  const Index d = map.dim();
  return BlrModel(GaussianDist(Vector::Zero(d), SpdMatrix::identity(d, 1.0 / alpha)),
                  beta, std::move(map));
}

BlrPosterior prior_posterior(const BlrModel& model) {
  return {model.prior.mean, model.prior.cov, 0};
}

SpdMatrix posterior_covariance(const SpdMatrix& prior_cov, double beta,
                               const Matrix& phi) {
  if (phi.cols() != prior_cov.dim()) throw DimMismatch("design matrix width");
  const SpdMatrix precision(prior_cov.inverse() + beta * phi.transpose() * phi);
  return SpdMatrix(precision.inverse());
}

BlrPosterior fit_features(const GaussianDist& prior, double beta,
                          const Matrix& phi, const Vector& targets) {
  require_positive_beta(beta);
  if (phi.rows() != targets.size()) {
    throw DimMismatch("input and target counts differ");
  }
  if (phi.cols() != prior.dim()) throw DimMismatch("design matrix width");
  const SpdMatrix precision(prior.cov.inverse() +
                            beta * phi.transpose() * phi);
  const Vector rhs = prior.cov.solve(prior.mean) + beta * phi.transpose() * targets;
  return {precision.solve(rhs), SpdMatrix(precision.inverse()), phi.rows()};
}

BlrPosterior fit(const BlrModel& model, std::span<const double> inputs,
                 std::span<const double> targets) {
  if (inputs.size() != targets.size()) {
    throw DimMismatch("input and target counts differ");
  }
  const Vector y = Eigen::Map<const Vector>(targets.data(),
                                            static_cast<Index>(targets.size()));
  return fit_features(model.prior, model.beta, design_matrix(model.map, inputs), y);
}

BlrPosterior update(const BlrPosterior& post, const Vector& phi, double y,
                    double beta) {
  require_positive_beta(beta);
  const Matrix& s = post.cov.matrix();
  const Vector s_phi = s * phi;
  const double var = 1.0 / beta + phi.dot(s_phi);
  const Vector mean = post.mean + s_phi * ((y - phi.dot(post.mean)) / var);
  return {mean, SpdMatrix(s - s_phi * s_phi.transpose() / var), post.n_obs + 1};
}

BlrPosterior downdate(const BlrPosterior& post, const Vector& phi, double y,
                      double beta) {
  require_positive_beta(beta);
  if (post.n_obs == 0) throw DegenerateDowndate("posterior has no observations");
  const Matrix& s = post.cov.matrix();
  const double w = checked_omega(s, beta, phi);
  const Vector s_phi = s * phi;
  const Vector mean = post.mean - s_phi * ((y - phi.dot(post.mean)) / w);
  return {mean, SpdMatrix(s + s_phi * s_phi.transpose() / w), post.n_obs - 1};
}

double omega(const BlrPosterior& post, double beta, const Vector& phi) {
  return 1.0 / beta - phi.dot(post.cov.matrix() * phi);
}

Predictive predictive(const BlrPosterior& post, double beta, const Vector& phi) {
  return {post.mean.dot(phi), predictive_variance(post.cov.matrix(), beta, phi)};
}

Predictive predictive(const BlrModel& model, const BlrPosterior& post, double x) {
  return predictive(post, model.beta, eval(model.map, x));
}

double predictive_variance(const Matrix& cov, double beta, const Vector& phi) {
  return 1.0 / beta + phi.dot(cov * phi);
}

void absorb_in_place(Matrix& cov, const Vector& phi, double beta) {
  const Vector s_phi = cov * phi;
  const double var = 1.0 / beta + phi.dot(s_phi);
  cov.noalias() -= s_phi * s_phi.transpose() / var;
  cov = 0.5 * (cov + cov.transpose()).eval();
}

double loo_variance_increase(const Matrix& cov, double beta,
                             const Vector& phi_test, const Vector& phi_removed) {
  const double w = checked_omega(cov, beta, phi_removed);
  const double cross = phi_test.dot(cov * phi_removed);
  return cross * cross / w;
}

double loo_predictive_variance(const Matrix& cov, double beta,
                               const Vector& phi_test, const Vector& phi_removed) {
  return predictive_variance(cov, beta, phi_test) +
         loo_variance_increase(cov, beta, phi_test, phi_removed);
}

}  // namespace infosens
