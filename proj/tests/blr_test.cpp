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

#include <random>

#include <Eigen/LU>
#include <gtest/gtest.h>

#include "infosens/oracle.hpp"

namespace infosens {
namespace {

struct Data {
  std::vector<double> x;
  std::vector<double> y;
};

Data random_data(std::uint64_t seed, int n) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z;
  Data d;
  for (int i = 0; i < n; ++i) {
    d.x.push_back(z(gen));
    d.y.push_back(z(gen));
  }
  return d;
}

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

const BlrModel kConstant = BlrModel::isotropic(1.0, 1.0, FeatureMapSpec::constant());

TEST(FitTest, ConstantZeroTarget) {
  const auto post = fit(kConstant, std::vector<double>{0.4}, std::vector<double>{0.0});
  EXPECT_NEAR(post.mean(0), 0.0, 1e-15);
  EXPECT_NEAR(post.cov.matrix()(0, 0), 0.5, 1e-15);
  EXPECT_EQ(post.n_obs, 1);
}

TEST(FitTest, ConstantShrinksByHalf) {
  const auto post = fit(kConstant, std::vector<double>{0.4}, std::vector<double>{2.0});
  EXPECT_NEAR(post.mean(0), 1.0, 1e-15);
  EXPECT_NEAR(post.cov.matrix()(0, 0), 0.5, 1e-15);
}

TEST(FitTest, PrecisionMatchesDirectAssembly) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(10, -2.0, 2.0));
  const Data d = random_data(1, 50);
  const auto post = fit(model, d.x, d.y);
  Matrix phi(50, 10);
  for (int n = 0; n < 50; ++n) phi.row(n) = eval(model.map, d.x[n]).transpose();
  const Matrix precision = Matrix::Identity(10, 10) + phi.transpose() * phi;
  EXPECT_LT(max_abs(post.cov.inverse() - precision), 1e-10);
}

TEST(FitTest, GeneralPriorMean) {
  // S^{-1} m = S0^{-1} m0 + beta Phi^T y, checked directly.
  Matrix s0(2, 2);
  s0 << 2.0, 0.3, 0.3, 0.5;
  Vector m0(2);
  m0 << 1.0, -0.5;
  const BlrModel model(GaussianDist(m0, SpdMatrix(s0)), 2.5, FeatureMapSpec::polynomial(2));
  const Data d = random_data(2, 7);
  const auto post = fit(model, d.x, d.y);
  const Matrix phi = design_matrix(model.map, d.x);
  const Vector y = Eigen::Map<const Vector>(d.y.data(), 7);
  const Vector lhs = post.cov.solve(post.mean);
  const Vector rhs = s0.inverse() * m0 + 2.5 * phi.transpose() * y;
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(FitTest, CovarianceIgnoresTargets) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(5, -2.0, 2.0));
  Data d = random_data(3, 12);
  const auto a = fit(model, d.x, d.y);
  std::reverse(d.y.begin(), d.y.end());
  const auto b = fit(model, d.x, d.y);
  EXPECT_EQ(a.cov.matrix(), b.cov.matrix());
}

TEST(FitTest, Validation) {
  EXPECT_THROW(BlrModel::isotropic(0.0, 1.0, FeatureMapSpec::constant()), std::invalid_argument);
  EXPECT_THROW(BlrModel::isotropic(1.0, -1.0, FeatureMapSpec::constant()), std::invalid_argument);
  EXPECT_THROW(BlrModel(GaussianDist(Vector::Zero(2), SpdMatrix::identity(2)), 1.0,
                        FeatureMapSpec::constant()),
               DimMismatch);
  EXPECT_THROW(fit(kConstant, std::vector<double>{1.0}, std::vector<double>{}), DimMismatch);
}

TEST(FitTest, MatchesSequentialUpdates) {
  const auto model = BlrModel::isotropic(0.7, 2.0, make_rbf_grid(6, -2.0, 2.0));
  const Data d = random_data(4, 20);
  BlrPosterior seq = prior_posterior(model);
  for (std::size_t n = 0; n < d.x.size(); ++n) {
    seq = update(seq, eval(model.map, d.x[n]), d.y[n], model.beta);
  }
  const auto batch = fit(model, d.x, d.y);
  EXPECT_LT(max_abs(seq.cov.matrix() - batch.cov.matrix()), 1e-8);
  EXPECT_LT((seq.mean - batch.mean).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_EQ(seq.n_obs, 20);
}

TEST(PredictiveTest, ConstantPrior) {
  EXPECT_NEAR(predictive(kConstant, prior_posterior(kConstant), 0.0).variance, 2.0, 1e-15);
}

TEST(PredictiveTest, ConstantOnePoint) {
  const auto post = fit(kConstant, std::vector<double>{0.0}, std::vector<double>{1.0});
  EXPECT_NEAR(predictive(kConstant, post, 5.0).variance, 1.5, 1e-15);
}

TEST(PredictiveTest, MatchesOracle) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(10, -2.0, 2.0));
  const Data d = random_data(5, 50);
  const auto post = fit(model, d.x, d.y);
  const InputConfiguration cfg(model, d.x, 0.37);
  const JointGaussian j = oracle::build_single_task(cfg);
  const auto train = oracle::train_labels(50);
  Vector values = Eigen::Map<const Vector>(d.y.data(), 50);
  const GaussianDist ref = condition(j, j.indices({"y_test"}), j.indices(train)).at(values);
  const Predictive p = predictive(model, post, 0.37);
  EXPECT_NEAR(p.variance, ref.cov.matrix()(0, 0), 1e-8);
  EXPECT_NEAR(p.mean, ref.mean(0), 1e-8);
}

TEST(PredictiveTest, VarianceNeverGrows) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(10, -2.0, 2.0));
  const Data d = random_data(6, 30);
  const std::vector<double> probes = {-3.0, -1.0, 0.0, 0.5, 2.5};
  BlrPosterior post = prior_posterior(model);
  for (std::size_t n = 0; n < d.x.size(); ++n) {
    const BlrPosterior next = update(post, eval(model.map, d.x[n]), d.y[n], model.beta);
    for (double x : probes) {
      EXPECT_LE(predictive(model, next, x).variance, predictive(model, post, x).variance + 1e-12);
    }
    post = next;
  }
}

TEST(DowndateTest, RecoversSmallerFit) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(4, -2.0, 2.0));
  const Data d = random_data(7, 2);
  const auto both = fit(model, d.x, d.y);
  const auto back = downdate(both, eval(model.map, d.x[1]), d.y[1], model.beta);
  const auto first =
      fit(model, std::vector<double>{d.x[0]}, std::vector<double>{d.y[0]});
  EXPECT_LT(max_abs(back.cov.matrix() - first.cov.matrix()), 1e-10);
  EXPECT_LT((back.mean - first.mean).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_EQ(back.n_obs, 1);
}

TEST(DowndateTest, OnlyPointGivesPrior) {
  const auto post = fit(kConstant, std::vector<double>{0.0}, std::vector<double>{3.0});
  const auto back = downdate(post, Vector::Ones(1), 3.0, 1.0);
  EXPECT_NEAR(back.cov.matrix()(0, 0), 1.0, 1e-10);
  EXPECT_NEAR(back.mean(0), 0.0, 1e-10);
}

TEST(DowndateTest, EveryPointMatchesRefit) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(10, -2.0, 2.0));
  const Data d = random_data(8, 50);
  const auto post = fit(model, d.x, d.y);
  for (std::size_t n = 0; n < 50; ++n) {
    Data rest = d;
    rest.x.erase(rest.x.begin() + static_cast<std::ptrdiff_t>(n));
    rest.y.erase(rest.y.begin() + static_cast<std::ptrdiff_t>(n));
    const auto refit = fit(model, rest.x, rest.y);
    const auto down = downdate(post, eval(model.map, d.x[n]), d.y[n], model.beta);
    EXPECT_LT(max_abs(down.cov.matrix() - refit.cov.matrix()), 1e-8) << n;
    EXPECT_LT((down.mean - refit.mean).cwiseAbs().maxCoeff(), 1e-8) << n;
  }
}

TEST(DowndateTest, InvertsUpdate) {
  const auto model = BlrModel::isotropic(1.0, 3.0, make_rbf_grid(5, -2.0, 2.0));
  const Data d = random_data(9, 10);
  const auto post = fit(model, d.x, d.y);
  const Vector phi = eval(model.map, 0.3);
  const auto round = downdate(update(post, phi, -0.8, 3.0), phi, -0.8, 3.0);
  EXPECT_LT(max_abs(round.cov.matrix() - post.cov.matrix()), 1e-8);
  EXPECT_LT((round.mean - post.mean).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(DowndateTest, Degenerate) {
  EXPECT_THROW(downdate(prior_posterior(kConstant), Vector::Ones(1), 0.0, 1.0),
               DegenerateDowndate);
  // A point never observed: omega = 1/beta - phi^T S phi is negative here.
  const auto post = fit(kConstant, std::vector<double>{0.0}, std::vector<double>{0.0});
  EXPECT_THROW(downdate(post, Vector::Constant(1, 3.0), 0.0, 1.0), DegenerateDowndate);
}

TEST(OmegaTest, Constant) {
  const auto one = fit(kConstant, std::vector<double>{0.0}, std::vector<double>{0.0});
  EXPECT_NEAR(omega(one, 1.0, Vector::Ones(1)), 0.5, 1e-15);
  const auto nine = fit(kConstant, std::vector<double>(9, 0.0), std::vector<double>(9, 0.0));
  EXPECT_NEAR(omega(nine, 1.0, Vector::Ones(1)), 0.9, 1e-15);
}

TEST(OmegaTest, PositiveOnTrainingInputs) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(10, -2.0, 2.0));
  const Data d = random_data(10, 50);
  const auto post = fit(model, d.x, d.y);
  for (double x : d.x) EXPECT_GT(omega(post, 1.0, eval(model.map, x)), kOmegaFloor);
}

TEST(LooTest, VarianceMatchesRefit) {
  const auto model = BlrModel::isotropic(1.0, 1.0, make_rbf_grid(6, -2.0, 2.0));
  const Data d = random_data(11, 8);
  const auto post = fit(model, d.x, d.y);
  const Vector test = eval(model.map, 0.2);
  Data rest = d;
  rest.x.erase(rest.x.begin() + 3);
  rest.y.erase(rest.y.begin() + 3);
  const auto refit = fit(model, rest.x, rest.y);
  EXPECT_NEAR(loo_predictive_variance(post.cov.matrix(), 1.0, test, eval(model.map, d.x[3])),
              predictive_variance(refit.cov.matrix(), 1.0, test), 1e-12);
}

}  // namespace
}  // namespace infosens
