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

#include "infosens/oracle.hpp"

#include <cmath>

namespace infosens::oracle {
namespace {

// Joint variables as an affine map of independent sources: x = mean + T s
// with Cov(s) = diag(source_var).
struct Layout {
  std::vector<JointGaussian::Block> blocks;
  Matrix transform;
  Vector mean;
  Vector source_var;

  Index add_block(const std::string& name, Index size) {
    const Index offset = transform.rows();
    blocks.push_back({name, offset, size});
    transform.conservativeResize(offset + size, source_var.size());
    transform.bottomRows(size).setZero();
    mean.conservativeResize(offset + size);
    mean.tail(size).setZero();
    return offset;
  }

  Index add_sources(Index size, double var) {
    const Index offset = source_var.size();
    source_var.conservativeResize(offset + size);
    source_var.tail(size).setConstant(var);
    transform.conservativeResize(transform.rows(), offset + size);
    transform.rightCols(size).setZero();
    return offset;
  }

  JointGaussian build() const {
    const Matrix cov = transform * source_var.asDiagonal() * transform.transpose();
    return JointGaussian(blocks, mean, cov);
  }
};

// Adds y = phi^T w + noise as a block, w being the rows [w_row, w_row + d).
void add_target(Layout& l, const std::string& name, const Vector& phi, Index w_row,
                double beta) {
  const Index noise = l.add_sources(1, 1.0 / beta);
  const Index row = l.add_block(name, 1);
  l.transform.row(row) = phi.transpose() * l.transform.middleRows(w_row, phi.size());
  l.transform(row, noise) = 1.0;
  l.mean(row) = phi.dot(l.mean.segment(w_row, phi.size()));
}

Layout single_task_layout(const InputConfiguration& cfg) {
  const auto& model = cfg.model;
  const Index d = model.dim();
  Layout l;
  // Whitened parameter source so that W = m0 + L s.
  const Index src = l.add_sources(d, 1.0);
  const Index w = l.add_block("W", d);
  const Matrix chol = model.prior.cov.llt().matrixL();
  l.transform.block(w, src, d, d) = chol;
  l.mean.segment(w, d) = model.prior.mean;
  const Matrix phi = design_matrix(model.map, cfg.train_inputs);
  for (Index n = 0; n < phi.rows(); ++n) {
    add_target(l, indexed("y_train", n), phi.row(n).transpose(), w, model.beta);
  }
  add_target(l, "y_test", eval(model.map, cfg.test_input), w, model.beta);
  return l;
}

}  // namespace

Labels train_labels(Index n) {
  Labels out;
  for (Index i = 0; i < n; ++i) out.push_back(indexed("y_train", i));
  return out;
}

Labels task_labels(Index m, Index n) {
  Labels out;
  for (Index i = 0; i < n; ++i) out.push_back(indexed("y_task", m, i));
  return out;
}

Labels concat(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

JointGaussian build_single_task(const InputConfiguration& cfg) {
  return single_task_layout(cfg).build();
}

JointGaussian build_with_resample(const InputConfiguration& cfg) {
  const auto& model = cfg.model;
  const Index d = model.dim();
  Layout l = single_task_layout(cfg);
  const Matrix phi = design_matrix(model.map, cfg.train_inputs);
  const SpdMatrix post = posterior_covariance(model.prior.cov, model.beta, phi);

  const Index y0 = l.blocks[1].offset;
  const Index count = phi.rows();
  // w~ = S_N (S0^{-1} m0 + beta Phi^T y) + chol(S_N) xi
  const Matrix gain = model.beta * post.matrix() * phi.transpose();
  const Index xi = l.add_sources(d, 1.0);
  const Index row = l.add_block("W_tilde", d);
  l.transform.middleRows(row, d) = gain * l.transform.middleRows(y0, count);
  l.transform.block(row, xi, d, d) = Matrix(post.llt().matrixL());
  l.mean.segment(row, d) = post.matrix() * model.prior.cov.solve(model.prior.mean) +
                           gain * l.mean.segment(y0, count);
  return l.build();
}

JointGaussian build_meta(const MetaConfiguration& cfg) {
  const auto& model = cfg.model;
  const Index d = model.dim();
  Layout l;
  const Index u_src = l.add_sources(d, 1.0 / model.gamma);
  const Index u = l.add_block("U", d);
  l.transform.block(u, u_src, d, d).setIdentity();

  auto add_task_param = [&](const std::string& name) {
    const Index eps = l.add_sources(d, 1.0 / model.alpha);
    const Index row = l.add_block(name, d);
    l.transform.block(row, u_src, d, d).setIdentity();
    l.transform.block(row, eps, d, d).setIdentity();
    return row;
  };

  std::vector<Index> task_rows;
  for (Index m = 0; m < cfg.num_tasks(); ++m) {
    task_rows.push_back(add_task_param(indexed("W_task", m)));
  }
  const Index w = add_task_param("W");

  for (Index m = 0; m < cfg.num_tasks(); ++m) {
    const Matrix phi = design_matrix(model.map, cfg.task_inputs[static_cast<std::size_t>(m)]);
    for (Index n = 0; n < phi.rows(); ++n) {
      add_target(l, indexed("y_task", m, n), phi.row(n).transpose(),
                 task_rows[static_cast<std::size_t>(m)], model.beta);
    }
  }
  const Matrix phi = design_matrix(model.map, cfg.test_task_inputs);
  for (Index n = 0; n < phi.rows(); ++n) {
    add_target(l, indexed("y_train", n), phi.row(n).transpose(), w, model.beta);
  }
  add_target(l, "y_test", eval(model.map, cfg.test_input), w, model.beta);
  return l.build();
}

double cond_entropy(const JointGaussian& j, const Labels& target, const Labels& given) {
  const auto t = j.indices(target);
  const auto g = j.indices(given);
  const ConditionalGaussian c = condition(j, t, g);
  return 0.5 * (static_cast<double>(t.size()) * kLogTwoPiE + c.cov.logdet());
}

double mi(const JointGaussian& j, const Labels& a, const Labels& b, const Labels& given) {
  return cond_entropy(j, a, given) - cond_entropy(j, a, concat(b, given));
}

double lautum_kl_form(const InputConfiguration& cfg) {
  const JointGaussian j = build_with_resample(cfg);
  const Labels pair = concat({"W_tilde"}, train_labels(cfg.n()));
  const Labels w = {"W"};
  const ConditionalGaussian c = condition(j, j.indices(pair), j.indices(w));
  // The conditional means of the two distributions agree, so only the
  // covariances enter.
  const Index d = cfg.model.dim();
  const Matrix& joint = c.cov.matrix();
  Matrix product = Matrix::Zero(joint.rows(), joint.cols());
  product.topLeftCorner(d, d) = joint.topLeftCorner(d, d);
  product.bottomRightCorner(cfg.n(), cfg.n()) = joint.bottomRightCorner(cfg.n(), cfg.n());
  const SpdMatrix prod(product);
  const GaussianDist p(Vector::Zero(joint.rows()), prod);
  const GaussianDist q(Vector::Zero(joint.rows()), c.cov);
  return kl(p, q);
}

}  // namespace infosens::oracle
