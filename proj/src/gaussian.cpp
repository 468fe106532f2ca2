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

#include "infosens/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace infosens {
namespace {

// Beyond this relative asymmetry the input is not a covariance at all, as
// opposed to one that drifted through floating-point accumulation.
constexpr double kAsymmetryTolerance = 1e-8;

Matrix symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimMismatch(os.str());
  }
  if (!m.allFinite()) {
    throw NotPositiveDefinite("matrix has non-finite entries");
  }
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale > 0.0 &&
      (m - m.transpose()).cwiseAbs().maxCoeff() > kAsymmetryTolerance * scale) {
    throw NotPositiveDefinite("matrix is not symmetric");
  }
  return 0.5 * (m + m.transpose());
}

Eigen::LLT<Matrix> factor(const Matrix& sym) {
  Eigen::LLT<Matrix> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("Cholesky factorization hit a non-positive pivot");
  }
  return llt;
}

double logdet_of(const Eigen::LLT<Matrix>& llt) {
  const auto& l = llt.matrixLLT();
  double acc = 0.0;
  for (Index i = 0; i < l.rows(); ++i) {
    acc += std::log(l(i, i));
  }
  return 2.0 * acc;
}

Matrix select(const Matrix& m, std::span<const Index> rows,
              std::span<const Index> cols) {
  Matrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) = m(rows[i], cols[j]);
    }
  }
  return out;
}

Vector select(const Vector& v, std::span<const Index> idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out(static_cast<Index>(i)) = v(idx[i]);
  }
  return out;
}

}  // namespace

SpdMatrix::SpdMatrix(const Matrix& m)
    : matrix_(symmetrized(m)), llt_(factor(matrix_)) {}

SpdMatrix SpdMatrix::identity(Index dim, double scale) {
  return SpdMatrix(scale * Matrix::Identity(dim, dim));
}

double SpdMatrix::logdet() const { return logdet_of(llt_); }

Matrix SpdMatrix::inverse() const {
  return llt_.solve(Matrix::Identity(dim(), dim()));
}

double chol_logdet(const Matrix& m) { return logdet_of(factor(symmetrized(m))); }

GaussianDist::GaussianDist(Vector mean_in, SpdMatrix cov_in)
    : mean(std::move(mean_in)), cov(std::move(cov_in)) {
  if (mean.size() != cov.dim()) {
    throw DimMismatch("mean and covariance dimensions differ");
  }
}

double entropy(const GaussianDist& g) {
  return 0.5 * static_cast<double>(g.dim()) * kLogTwoPiE + 0.5 * g.cov.logdet();
}

double kl(const GaussianDist& p, const GaussianDist& q) {
  if (p.dim() != q.dim()) {
    throw DimMismatch("KL between Gaussians of different dimension");
  }
  const auto k = static_cast<double>(p.dim());
  const Vector diff = q.mean - p.mean;
  const double trace = q.cov.solve(p.cov.matrix()).trace();
  const double mahalanobis = diff.dot(q.cov.solve(diff));
  return 0.5 * (trace + mahalanobis - k + q.cov.logdet() - p.cov.logdet());
}

JointGaussian::JointGaussian(std::vector<Block> blocks, Vector mean,
                             const Matrix& cov)
    : blocks_(std::move(blocks)), mean_(std::move(mean)), cov_(cov) {
  if (mean_.size() != cov_.dim()) {
    throw DimMismatch("joint mean and covariance dimensions differ");
  }
  Index next = 0;
  for (const auto& b : blocks_) {
    if (b.offset != next || b.size <= 0) {
      throw DimMismatch("joint blocks must tile the coordinate range: " + b.name);
    }
    next += b.size;
  }
  if (next != mean_.size()) {
    throw DimMismatch("joint blocks do not cover every coordinate");
  }
}

bool JointGaussian::has(std::string_view name) const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [&](const Block& b) { return b.name == name; });
}

const JointGaussian::Block& JointGaussian::find(std::string_view name) const {
  for (const auto& b : blocks_) {
    if (b.name == name) return b;
  }
  throw std::out_of_range("no block named " + std::string(name));
}

std::vector<Index> JointGaussian::indices(std::span<const std::string> names) const {
  std::vector<Index> out;
  for (const auto& n : names) {
    const Block& b = find(n);
    for (Index i = 0; i < b.size; ++i) out.push_back(b.offset + i);
  }
  return out;
}

std::vector<Index> JointGaussian::indices(
    std::initializer_list<std::string_view> names) const {
  std::vector<std::string> owned(names.begin(), names.end());
  return indices(std::span<const std::string>(owned));
}

GaussianDist ConditionalGaussian::at(const Vector& given_values) const {
  if (given_values.size() != gain.cols()) {
    throw DimMismatch("conditioning value count does not match the given set");
  }
  return GaussianDist(offset + gain * given_values, cov);
}

ConditionalGaussian condition(const JointGaussian& joint,
                              std::span<const Index> target,
                              std::span<const Index> given) {
  for (Index t : target) {
    if (std::find(given.begin(), given.end(), t) != given.end()) {
      throw std::invalid_argument("target and given sets overlap");
    }
  }
  const Matrix& s = joint.cov().matrix();
  const Matrix s_tt = select(s, target, target);
  const Vector mu_t = select(joint.mean(), target);
  if (given.empty()) {
    return {mu_t, Matrix::Zero(static_cast<Index>(target.size()), 0),
            SpdMatrix(s_tt)};
  }
  const SpdMatrix s_gg(select(s, given, given));
  const Matrix s_tg = select(s, target, given);
  // gain = S_tg S_gg^{-1}
  const Matrix gain = s_gg.solve(Matrix(s_tg.transpose())).transpose();
  const Vector mu_g = select(joint.mean(), given);
  return {mu_t - gain * mu_g, gain, SpdMatrix(s_tt - gain * s_tg.transpose())};
}

std::string indexed(std::string_view base, Index i) {
  std::ostringstream os;
  os << base << '[' << i << ']';
  return os.str();
}

std::string indexed(std::string_view base, Index i, Index j) {
  std::ostringstream os;
  os << base << '[' << i << "][" << j << ']';
  return os.str();
}

}  // namespace infosens
