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
#include <functional>

#include <gtest/gtest.h>

#include "infosens/rng.hpp"

namespace infosens {
namespace {

using oracle::Labels;

InputConfiguration constant_single(int n) {
  return InputConfiguration(BlrModel::isotropic(1.0, 1.0, FeatureMapSpec::constant()),
                            std::vector<double>(static_cast<std::size_t>(n), 0.0), 0.0);
}

// Compares the joint covariance against one accumulated from `draw`, entry by
// entry, to five standard errors of the sample covariance.
void expect_sampled_cov(const JointGaussian& j, const std::function<Vector(RandomStream&)>& draw,
                        int samples, std::uint64_t seed) {
  RandomStream rng(seed);
  const Index k = j.dim();
  Matrix acc = Matrix::Zero(k, k);
  Vector sum = Vector::Zero(k);
  constexpr int kChunk = 4096;
  Matrix chunk(k, kChunk);
  for (int done = 0; done < samples; done += kChunk) {
    const int take = std::min(kChunk, samples - done);
    for (int i = 0; i < take; ++i) chunk.col(i) = draw(rng);
    acc.noalias() += chunk.leftCols(take) * chunk.leftCols(take).transpose();
    sum += chunk.leftCols(take).rowwise().sum();
  }
  const Vector mean = sum / samples;
  const Matrix cov = acc / samples - mean * mean.transpose();
  const Matrix& ref = j.cov().matrix();
  for (Index a = 0; a < k; ++a) {
    EXPECT_NEAR(mean(a), j.mean()(a), 5.0 * std::sqrt(ref(a, a) / samples));
    for (Index b = 0; b < k; ++b) {
      const double se = std::sqrt((ref(a, a) * ref(b, b) + ref(a, b) * ref(a, b)) / samples);
      EXPECT_NEAR(cov(a, b), ref(a, b), 5.0 * se) << a << "," << b;
    }
  }
}

TEST(OracleJointTest, ConstantMapSinglePoint) {
  const JointGaussian j = oracle::build_single_task(constant_single(1));
  const Matrix c = j.cov().matrix();
  const auto w = j.indices({"W"})[0];
  const auto y0 = j.indices({"y_train[0]"})[0];
  const auto yt = j.indices({"y_test"})[0];
  EXPECT_DOUBLE_EQ(c(y0, y0), 2.0);
  EXPECT_DOUBLE_EQ(c(yt, yt), 2.0);
  EXPECT_DOUBLE_EQ(c(y0, yt), 1.0);
  EXPECT_DOUBLE_EQ(c(w, y0), 1.0);
  EXPECT_DOUBLE_EQ(c(w, w), 1.0);
}

TEST(OracleJointTest, SingleTaskMatchesSampling) {
  const auto map = make_rbf_grid(3, -2.0, 2.0);
  Vector m0(3);
  m0 << 0.5, -0.2, 1.0;
  Matrix s0(3, 3);
  s0 << 1.0, 0.3, 0.0, 0.3, 0.8, -0.2, 0.0, -0.2, 0.5;
  const BlrModel model(GaussianDist(m0, SpdMatrix(s0)), 2.0, map);
  const std::vector<double> x = {-1.0, 0.2, 1.4};
  const InputConfiguration cfg(model, x, 0.7);
  const JointGaussian j = oracle::build_single_task(cfg);
  const Eigen::LLT<Matrix> chol(s0);
  const Matrix phi = design_matrix(map, x);
  const Vector phi_test = eval(map, 0.7);
  const double noise = 1.0 / std::sqrt(2.0);
  expect_sampled_cov(
      j,
      [&](RandomStream& rng) {
        const Vector w = m0 + chol.matrixL() * rng.normal_vector(3);
        Vector out(7);
        out.head(3) = w;
        for (Index n = 0; n < 3; ++n) out(3 + n) = phi.row(n).dot(w) + noise * rng.normal();
        out(6) = phi_test.dot(w) + noise * rng.normal();
        return out;
      },
      1000000, 11);
}

TEST(OracleJointTest, MetaMatchesSampling) {
  const MetaModel model(2.0, 1.5, 0.5, make_rbf_grid(3, -2.0, 2.0));
  const MetaConfiguration cfg(model, {{-1.0, 0.5}, {0.3, 1.1}}, {0.0, -0.6}, 0.9);
  const JointGaussian j = oracle::build_meta(cfg);
  // generative order must match the block layout
  std::vector<std::string> order = {"U", "W_task[0]", "W_task[1]", "W", "y_task[0][0]",
                                    "y_task[0][1]", "y_task[1][0]", "y_task[1][1]",
                                    "y_train[0]", "y_train[1]", "y_test"};
  ASSERT_EQ(j.blocks().size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) ASSERT_EQ(j.blocks()[i].name, order[i]);
  const double su = 1.0 / std::sqrt(model.gamma);
  const double sw = 1.0 / std::sqrt(model.alpha);
  const double sn = 1.0 / std::sqrt(model.beta);
  expect_sampled_cov(
      j,
      [&](RandomStream& rng) {
        Vector out(j.dim());
        const Vector u = su * rng.normal_vector(3);
        const Vector w0 = u + sw * rng.normal_vector(3);
        const Vector w1 = u + sw * rng.normal_vector(3);
        const Vector w = u + sw * rng.normal_vector(3);
        out << u, w0, w1, w, eval(model.map, -1.0).dot(w0) + sn * rng.normal(),
            eval(model.map, 0.5).dot(w0) + sn * rng.normal(),
            eval(model.map, 0.3).dot(w1) + sn * rng.normal(),
            eval(model.map, 1.1).dot(w1) + sn * rng.normal(),
            eval(model.map, 0.0).dot(w) + sn * rng.normal(),
            eval(model.map, -0.6).dot(w) + sn * rng.normal(),
            eval(model.map, 0.9).dot(w) + sn * rng.normal();
        return out;
      },
      1000000, 12);
}

TEST(OracleJointTest, MetaMarginalIsWidenedSingleTask) {
  const MetaModel model(2.0, 1.5, 0.5, make_rbf_grid(3, -2.0, 2.0));
  const MetaConfiguration meta(model, {}, {0.1, 0.8, -1.2}, 0.4);
  const InputConfiguration single(
      BlrModel(GaussianDist(Vector::Zero(3), SpdMatrix::identity(3, 0.5 + 2.0)), 1.5, model.map),
      meta.test_task_inputs, meta.test_input);
  const JointGaussian jm = oracle::build_meta(meta);
  const JointGaussian js = oracle::build_single_task(single);
  const Labels names = {"W", "y_train[0]", "y_train[1]", "y_train[2]", "y_test"};
  const Matrix a = condition(jm, jm.indices(names), {}).cov.matrix();
  const Matrix b = condition(js, js.indices(names), {}).cov.matrix();
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(OracleJointTest, CrossTaskCovarianceThroughU) {
  // Features x, x^2 at x = 1 are (1, 1); tasks couple only through U.
  const MetaModel model(1.0, 1.0, 4.0, FeatureMapSpec::polynomial(2));
  const MetaConfiguration cfg(model, {{1.0}, {1.0}}, {1.0}, 1.0);
  const JointGaussian j = oracle::build_meta(cfg);
  const Matrix c = j.cov().matrix();
  const auto a = j.indices({"y_task[0][0]"})[0];
  const auto b = j.indices({"y_task[1][0]"})[0];
  EXPECT_NEAR(c(a, b), 2.0 / 4.0, 1e-15);
  EXPECT_NEAR(c(a, a), 2.0 / 4.0 + 2.0 + 1.0, 1e-15);
  EXPECT_NEAR(c(j.indices({"W_task[0]"})[0], j.indices({"W"})[1]), 0.0, 1e-15);
}

TEST(OracleInfoTest, ConditionalEntropy) {
  const JointGaussian j = oracle::build_single_task(constant_single(1));
  const double h1 = 0.5 * std::log(2.0 * M_PI * M_E);
  EXPECT_NEAR(oracle::cond_entropy(j, {"y_test"}, {"W"}), h1, 1e-14);
  EXPECT_NEAR(oracle::cond_entropy(j, {"W"}, {}), h1, 1e-14);
  EXPECT_NEAR(oracle::cond_entropy(j, {"y_test"}, {}), h1 + 0.5 * std::log(2.0), 1e-14);
  EXPECT_NEAR(oracle::cond_entropy(j, {"y_test"}, {"y_train[0]"}), h1 + 0.5 * std::log(1.5),
              1e-14);
}

TEST(OracleInfoTest, MutualInformation) {
  const JointGaussian j = oracle::build_single_task(constant_single(1));
  EXPECT_NEAR(oracle::mi(j, {"W"}, {"y_train[0]"}), 0.5 * std::log(2.0), 1e-14);
  // y_test and y_train are independent given W
  EXPECT_NEAR(oracle::mi(j, {"y_test"}, {"y_train[0]"}, {"W"}), 0.0, 1e-14);
}

TEST(OracleInfoTest, SymmetryChainRuleAndSign) {
  const auto map = make_rbf_grid(4, -2.0, 2.0);
  const InputConfiguration cfg(BlrModel::isotropic(0.7, 3.0, map), {-1.5, -0.2, 0.4, 1.9}, 0.1);
  const JointGaussian j = oracle::build_single_task(cfg);
  const Labels a = {"y_test"};
  const Labels b = {"y_train[0]", "y_train[2]"};
  const Labels c = {"y_train[1]"};
  EXPECT_NEAR(oracle::mi(j, a, b), oracle::mi(j, b, a), 1e-12);
  EXPECT_NEAR(oracle::mi(j, a, b, c), oracle::mi(j, b, a, c), 1e-12);
  EXPECT_NEAR(oracle::mi(j, a, oracle::concat(c, b)),
              oracle::mi(j, a, c) + oracle::mi(j, a, b, c), 1e-12);
  for (const auto& x : {Labels{"W"}, a, b, c}) {
    for (const auto& y : {Labels{"y_train[3]"}, a}) {
      if (x == y) continue;
      EXPECT_GE(oracle::mi(j, x, y), 0.0);
    }
  }
}

TEST(OracleInfoTest, IndependentBlocksShareNothing) {
  // A task observed at x = 0 under polynomial features sees only noise.
  const MetaModel model(1.0, 1.0, 1.0, FeatureMapSpec::polynomial(2));
  const MetaConfiguration cfg(model, {{0.0}, {1.0}}, {1.0}, 1.0);
  const JointGaussian j = oracle::build_meta(cfg);
  EXPECT_NEAR(oracle::mi(j, {"y_task[0][0]"}, {"U", "W", "y_train[0]", "y_test"}), 0.0, 1e-14);
  EXPECT_NEAR(oracle::mi(j, {"W_task[1]"}, {"W"}, {"U"}), 0.0, 1e-14);
  EXPECT_GT(oracle::mi(j, {"y_task[1][0]"}, {"y_train[0]"}), 0.01);
}

}  // namespace
}  // namespace infosens
