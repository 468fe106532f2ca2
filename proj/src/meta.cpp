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

#include "infosens/meta.hpp"

#include <cmath>
#include <sstream>

namespace infosens {
namespace {

// (beta^{-1} I + alpha^{-1} B) for B = Phi^T Phi. Sandwiching the N x N
// matrix s_m between Phi^T and Phi equals B times its inverse.
SpdMatrix task_kernel(const MetaModel& model, const Matrix& phi) {
  const Index d = model.dim();
  Matrix c = Matrix::Identity(d, d) / model.beta + phi.transpose() * phi / model.alpha;
  return SpdMatrix(c);
}

// Phi^T s Phi.
Matrix task_gram(const MetaModel& model, const Matrix& phi) {
  const Matrix g = task_kernel(model, phi).solve(Matrix(phi.transpose() * phi));
  return 0.5 * (g + g.transpose());
}

// Phi^T s y.
Vector task_projection(const MetaModel& model, const Matrix& phi, const Vector& y) {
  return task_kernel(model, phi).solve(Vector(phi.transpose() * y));
}

Vector as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
}

// -N ln beta + ln det A + ln det(A^{-1} + beta Phi^T Phi) with
// A = alpha^{-1} I + P^{-1}: the log-determinant of
// beta^{-1} I + Phi A Phi^T by the determinant lemma.
double target_logdet(const MetaModel& model, const Matrix& phi, const SpdMatrix& precision) {
  const Index d = model.dim();
  const SpdMatrix a(Matrix(Matrix::Identity(d, d) / model.alpha + precision.inverse()));
  const SpdMatrix inner(Matrix(a.inverse() + model.beta * phi.transpose() * phi));
  return -static_cast<double>(phi.rows()) * std::log(model.beta) + a.logdet() + inner.logdet();
}

// Per-task grams computed once and reused across subsets.
class TaskCache {
 public:
  explicit TaskCache(const MetaConfiguration& cfg) : model_(cfg.model) {
    for (const auto& inputs : cfg.task_inputs) {
      grams_.push_back(task_gram(model_, design_matrix(model_.map, inputs)));
    }
  }

  SpdMatrix precision(const std::vector<Index>& tasks) const {
    const Index d = model_.dim();
    Matrix p = model_.gamma * Matrix::Identity(d, d);
    for (Index m : tasks) p += grams_[static_cast<std::size_t>(m)];
    return SpdMatrix(p);
  }

 private:
  const MetaModel& model_;
  std::vector<Matrix> grams_;
};

std::vector<Index> all_tasks(Index count) {
  std::vector<Index> out;
  for (Index m = 0; m < count; ++m) out.push_back(m);
  return out;
}

std::vector<Index> all_but(Index count, Index skip) {
  std::vector<Index> out;
  for (Index m = 0; m < count; ++m) {
    if (m != skip) out.push_back(m);
  }
  return out;
}

void check_task(Index m, Index count, const char* what) {
  if (m < 0 || m >= count) {
    std::ostringstream os;
    os << what << " index " << m << " outside [0, " << count << ")";
    throw std::out_of_range(os.str());
  }
}

double task_size(const MetaConfiguration& cfg) {
  return static_cast<double>(cfg.num_tasks() > 0 ? cfg.task_inputs.front().size()
                                                 : cfg.test_task_inputs.size());
}

}  // namespace

MetaModel::MetaModel(double alpha_in, double beta_in, double gamma_in,
                     FeatureMapSpec map_in)
    : alpha(alpha_in), beta(beta_in), gamma(gamma_in), map(std::move(map_in)) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0)) {
    throw std::invalid_argument("alpha, beta and gamma must be positive");
  }
}

MetaConfiguration::MetaConfiguration(MetaModel model_in,
                                     std::vector<std::vector<double>> task_inputs_in,
                                     std::vector<double> test_task_inputs_in,
                                     double test_input_in,
                                     std::vector<std::vector<double>> task_targets_in,
                                     std::vector<double> test_task_targets_in)
    : model(std::move(model_in)),
      task_inputs(std::move(task_inputs_in)),
      test_task_inputs(std::move(test_task_inputs_in)),
      test_input(test_input_in),
      task_targets(std::move(task_targets_in)),
      test_task_targets(std::move(test_task_targets_in)) {
  for (const auto& t : task_inputs) {
    if (t.size() != task_inputs.front().size()) {
      throw DimMismatch("all meta-training tasks must have the same number of points");
    }
  }
  if (!task_inputs.empty() && !test_task_inputs.empty() &&
      test_task_inputs.size() != task_inputs.front().size()) {
    throw DimMismatch("the meta-test task must have as many points as each training task");
  }
  if (!task_targets.empty()) {
    if (task_targets.size() != task_inputs.size()) {
      throw DimMismatch("one target vector per meta-training task is required");
    }
    for (std::size_t m = 0; m < task_inputs.size(); ++m) {
      if (task_targets[m].size() != task_inputs[m].size()) {
        throw DimMismatch("one target per meta-training input is required");
      }
    }
  }
  if (!test_task_targets.empty() && test_task_targets.size() != test_task_inputs.size()) {
    throw DimMismatch("one target per meta-test input is required");
  }
}

HyperPosterior hyper_posterior(const MetaConfiguration& cfg) {
  return hyper_posterior(cfg, all_tasks(cfg.num_tasks()));
}

HyperPosterior hyper_posterior(const MetaConfiguration& cfg,
                               const std::vector<Index>& tasks) {
  const auto& model = cfg.model;
  const Index d = model.dim();
  Matrix precision = model.gamma * Matrix::Identity(d, d);
  Vector shift = Vector::Zero(d);
  for (Index m : tasks) {
    check_task(m, cfg.num_tasks(), "task");
    const auto k = static_cast<std::size_t>(m);
    const Matrix phi = design_matrix(model.map, cfg.task_inputs[k]);
    precision += task_gram(model, phi);
    if (!cfg.task_targets.empty()) {
      shift += task_projection(model, phi, as_vector(cfg.task_targets[k]));
    }
  }
  const SpdMatrix cov(SpdMatrix(precision).inverse());
  Vector mean = cov.matrix() * shift;
  return {std::move(mean), cov};
}

BlrPosterior task_posterior(const MetaModel& model, const Vector& u,
                            std::span<const double> inputs,
                            std::span<const double> targets) {
  if (u.size() != model.dim()) throw DimMismatch("hyper-parameter dimension");
  const BlrModel task(GaussianDist(u, SpdMatrix::identity(model.dim(), 1.0 / model.alpha)),
                      model.beta, model.map);
  return fit(task, inputs, targets);
}

BlrModel meta_test_model(const MetaConfiguration& cfg) {
  const auto& model = cfg.model;
  const HyperPosterior hp = hyper_posterior(cfg);
  const Index d = model.dim();
  SpdMatrix cov(Matrix(Matrix::Identity(d, d) / model.alpha + hp.cov.matrix()));
  return BlrModel(GaussianDist(hp.mean, std::move(cov)), model.beta, model.map);
}

namespace {

std::vector<double> test_targets_or_zero(const MetaConfiguration& cfg) {
  if (!cfg.test_task_targets.empty()) return cfg.test_task_targets;
  return std::vector<double>(cfg.test_task_inputs.size(), 0.0);
}

}  // namespace

Predictive meta_predictive(const MetaConfiguration& cfg) {
  const BlrModel model = meta_test_model(cfg);
  const BlrPosterior post = fit(model, cfg.test_task_inputs, test_targets_or_zero(cfg));
  return predictive(model, post, cfg.test_input);
}

Predictive meta_predictive_explicit(const MetaConfiguration& cfg) {
  const auto& model = cfg.model;
  const Index d = model.dim();
  const HyperPosterior hp = hyper_posterior(cfg);
  const Matrix phi_t = design_matrix(model.map, cfg.test_task_inputs);
  const Vector y_t = as_vector(test_targets_or_zero(cfg));
  const Vector phi_x = eval(model.map, cfg.test_input);

  // S_t and the part of m_t that does not depend on U.
  const SpdMatrix s_t(
      SpdMatrix(Matrix(model.alpha * Matrix::Identity(d, d) +
                       model.beta * phi_t.transpose() * phi_t))
          .inverse());
  const Vector lever = model.alpha * (s_t.matrix() * phi_x);

  // U given the meta-training tasks and the meta-test task's data.
  const Matrix hp_prec = hp.cov.inverse();
  const SpdMatrix s_u(
      SpdMatrix(Matrix(hp_prec + task_gram(model, phi_t))).inverse());
  const Vector m_u =
      s_u.matrix() * (hp_prec * hp.mean + task_projection(model, phi_t, y_t));

  const double mean =
      phi_x.dot(s_t.matrix() * (model.beta * phi_t.transpose() * y_t)) + lever.dot(m_u);
  const double var =
      1.0 / model.beta + phi_x.dot(s_t.matrix() * phi_x) + lever.dot(s_u.matrix() * lever);
  return {mean, var};
}

double memr_per_config(const MetaConfiguration& cfg) {
  return 0.5 * std::log(cfg.model.beta * meta_predictive(cfg).variance);
}

double task_target_logdet(const MetaConfiguration& cfg, const Matrix& phi,
                          const std::vector<Index>& given) {
  const HyperPosterior hp = hyper_posterior(cfg, given);
  return target_logdet(cfg.model, phi, SpdMatrix(hp.cov.inverse()));
}

double task_sensitivity(const MetaConfiguration& cfg, Index m) {
  check_task(m, cfg.num_tasks(), "task sensitivity");
  const TaskCache cache(cfg);
  const Matrix phi_t = design_matrix(cfg.model.map, cfg.test_task_inputs);
  const Index count = cfg.num_tasks();
  return 0.5 * (target_logdet(cfg.model, phi_t, cache.precision(all_but(count, m))) -
                target_logdet(cfg.model, phi_t, cache.precision(all_tasks(count))));
}

double task_chain_term(const MetaConfiguration& cfg, Index m) {
  check_task(m, cfg.num_tasks() - 1, "task chain");
  const TaskCache cache(cfg);
  const Matrix phi_next =
      design_matrix(cfg.model.map, cfg.task_inputs[static_cast<std::size_t>(m + 1)]);
  return 0.5 * (target_logdet(cfg.model, phi_next, cache.precision(all_tasks(m))) -
                target_logdet(cfg.model, phi_next, cache.precision(all_tasks(m + 1))));
}

MetaDecomposition decompose_meta(const MetaConfiguration& cfg, ChainWeighting weighting) {
  const auto& model = cfg.model;
  const Index d = model.dim();
  const Index count = cfg.num_tasks();
  const double n = task_size(cfg);
  if (cfg.n() == 0) throw std::invalid_argument("the meta-test task needs training points");

  const Matrix phi_t = design_matrix(model.map, cfg.test_task_inputs);
  const TaskCache cache(cfg);
  const SpdMatrix full = cache.precision(all_tasks(count));

  MetaDecomposition out;
  out.term_within =
      0.5 *
      chol_logdet(Matrix(Matrix::Identity(d, d) +
                         (model.beta / model.alpha) * phi_t.transpose() * phi_t)) /
      n;

  if (count == 0) {
    // I(U; Z^N) from the target covariance with and without U known.
    const SpdMatrix none = SpdMatrix::identity(d, model.gamma);
    const double ld_marginal = target_logdet(model, phi_t, none);
    const double ld_given_u =
        -n * std::log(model.beta) +
        chol_logdet(Matrix(Matrix::Identity(cfg.n(), cfg.n()) +
                           (model.beta / model.alpha) * phi_t * phi_t.transpose()));
    out.term_hyper = 0.5 * (ld_marginal - ld_given_u) / n;
  } else {
    const double nm = n * static_cast<double>(count);
    out.term_hyper = 0.5 * (full.logdet() - static_cast<double>(d) * std::log(model.gamma)) / nm;

    const double ld_full = target_logdet(model, phi_t, full);
    double sens = 0.0;
    for (Index m = 0; m < count; ++m) {
      sens += 0.5 * (target_logdet(model, phi_t, cache.precision(all_but(count, m))) - ld_full);
    }
    out.task_sens_sum = sens / nm;

    double chain = 0.0;
    for (Index m = 0; m + 1 < count; ++m) {
      const Matrix phi_next =
          design_matrix(model.map, cfg.task_inputs[static_cast<std::size_t>(m + 1)]);
      const double term =
          0.5 * (target_logdet(model, phi_next, cache.precision(all_tasks(m))) -
                 target_logdet(model, phi_next, cache.precision(all_tasks(m + 1))));
      const double weight =
          weighting == ChainWeighting::kWeighted ? static_cast<double>(m + 1) : 1.0;
      chain += weight * term;
    }
    out.task_chain_sum = chain / nm;
  }

  const InputConfiguration single(meta_test_model(cfg), cfg.test_task_inputs, cfg.test_input);
  const InfoDecomposition data = decompose(single, weighting);
  out.memr = data.cmi;
  out.data_sens_sum = data.sens_test_sum;
  out.data_chain_sum = data.sens_chain_sum;
  out.residual = out.memr - (out.term_within + out.term_hyper - out.task_sens_sum -
                             out.task_chain_sum - out.data_sens_sum - out.data_chain_sum);
  return out;
}

double bound_eq22(const MetaConfiguration& cfg) {
  const MetaDecomposition dec = decompose_meta(cfg);
  return dec.term_within + dec.term_hyper;
}

double bound_meta_improved(const MetaConfiguration& cfg) {
  const MetaDecomposition dec = decompose_meta(cfg);
  return dec.term_within + dec.term_hyper - dec.task_chain_sum - dec.data_chain_sum;
}

}  // namespace infosens
