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

// Dense Gaussian linear algebra. Every information quantity in the library
// bottoms out in the log-determinants computed here. All values are in nats.

#ifndef INFOSENS_GAUSSIAN_HPP_
#define INFOSENS_GAUSSIAN_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "infosens/errors.hpp"

namespace infosens {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// ln(2*pi*e), the per-coordinate entropy constant of a Gaussian.
inline constexpr double kLogTwoPiE = 2.8378770664093454836;
inline constexpr double kLogTwoPi = 1.8378770664093454836;

/// Symmetric positive-definite matrix together with its Cholesky factor.
///
/// The input is symmetrized as (A + A^T) / 2 before factorization, since
/// chains of rank-one updates drift asymmetrically. No jitter is ever added:
/// a non-positive pivot throws NotPositiveDefinite.
class SpdMatrix {
 public:
  explicit SpdMatrix(const Matrix& m);

  static SpdMatrix identity(Index dim, double scale = 1.0);

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const Eigen::LLT<Matrix>& llt() const { return llt_; }

  double logdet() const;
  Matrix inverse() const;
  Vector solve(const Vector& b) const { return llt_.solve(b); }
  Matrix solve(const Matrix& b) const { return llt_.solve(b); }

 private:
  Matrix matrix_;
  Eigen::LLT<Matrix> llt_;
};

/// ln det(m) through the Cholesky factor of the symmetrized input.
double chol_logdet(const Matrix& m);

struct GaussianDist {
  GaussianDist(Vector mean_in, SpdMatrix cov_in);

  Index dim() const { return mean.size(); }

  Vector mean;
  SpdMatrix cov;
};

/// (k/2) ln(2*pi*e) + (1/2) ln det(cov).
double entropy(const GaussianDist& g);

/// KL(p || q) in closed form. Throws DimMismatch when dimensions differ.
double kl(const GaussianDist& p, const GaussianDist& q);

/// Multivariate Gaussian over named blocks of coordinates, e.g. "W",
/// "y_train[3]" or "y_task[1][0]". Block names are unique and the blocks
/// partition [0, dim).
class JointGaussian {
 public:
  struct Block {
    std::string name;
    Index offset;
    Index size;
  };

  JointGaussian() = default;
  JointGaussian(std::vector<Block> blocks, Vector mean, const Matrix& cov);

  Index dim() const { return mean_.size(); }
  const Vector& mean() const { return mean_; }
  const SpdMatrix& cov() const { return cov_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  bool has(std::string_view name) const;
  /// Concatenated coordinate indices of the named blocks, in order.
  std::vector<Index> indices(std::span<const std::string> names) const;
  std::vector<Index> indices(std::initializer_list<std::string_view> names) const;

 private:
  const Block& find(std::string_view name) const;

  std::vector<Block> blocks_;
  Vector mean_;
  SpdMatrix cov_ = SpdMatrix::identity(0);
};

/// Distribution of the target coordinates given values of the conditioning
/// coordinates. The covariance does not depend on the conditioning values;
/// the mean is offset + gain * given_values.
struct ConditionalGaussian {
  Vector offset;
  Matrix gain;
  SpdMatrix cov;

  GaussianDist at(const Vector& given_values) const;
};

/// Schur-complement conditioning. target and given must be disjoint index
/// sets of the joint; an empty given set returns the marginal.
ConditionalGaussian condition(const JointGaussian& joint,
                              std::span<const Index> target,
                              std::span<const Index> given);

/// Builds a label for an indexed block, e.g. indexed("y_train", 3) ==
/// "y_train[3]".
std::string indexed(std::string_view base, Index i);
std::string indexed(std::string_view base, Index i, Index j);

}  // namespace infosens

#endif  // INFOSENS_GAUSSIAN_HPP_
