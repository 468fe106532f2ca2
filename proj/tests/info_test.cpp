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
#include <random>

#include <gtest/gtest.h>

#include "infosens/oracle.hpp"
#include "infosens/stats.hpp"

namespace infosens {
namespace {

InputConfiguration constant_config(int n) {
  return InputConfiguration(BlrModel::isotropic(1.0, 1.0, FeatureMapSpec::constant()),
                            std::vector<double>(static_cast<std::size_t>(n), 0.0), 0.0);
}

InputConfiguration rbf_config(std::uint64_t seed, int n) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = z(gen);
  return InputConfiguration(BlrModel::isotropic(1.0, 1.0, make_rbf_grid(10, -2.0, 2.0)), x,
                            z(gen));
}

TEST(CmiTest, Constant) {
  EXPECT_NEAR(cmi_per_config(constant_config(1)), 0.2027325541, 1e-10);
  EXPECT_NEAR(cmi_per_config(constant_config(3)), 0.1115717757, 1e-10);
}

TEST(CmiTest, ConstantDecreasesInN) {
  double prev = cmi_per_config(constant_config(1));
  for (int n = 2; n <= 64; ++n) {
    const double next = cmi_per_config(constant_config(n));
    EXPECT_LT(next, prev);
    prev = next;
  }
}

TEST(MiTest, Constant) {
  EXPECT_NEAR(mi_per_config(constant_config(1)), 0.3465735903, 1e-10);
  EXPECT_NEAR(mi_per_config(constant_config(3)), 0.6931471806, 1e-10);
}

TEST(SensTest, Constant) {
  EXPECT_NEAR(sens_test_point(constant_config(1), 0), 0.1438410362, 1e-10);
  for (Index n = 0; n < 2; ++n) {
    EXPECT_NEAR(sens_test_point(constant_config(2), n), 0.0588915178, 1e-10);
  }
}

TEST(ChainTest, Constant) {
  EXPECT_NEAR(sens_chain_term(constant_config(3), 0), 0.1438410362, 1e-10);
  EXPECT_NEAR(sens_chain_term(constant_config(3), 1), 0.0588915178, 1e-10);
}

TEST(IndexTest, OutOfRange) {
  EXPECT_THROW(sens_test_point(constant_config(2), 2), std::out_of_range);
  EXPECT_THROW(sens_chain_term(constant_config(2), 1), std::out_of_range);
  EXPECT_THROW(sens_chain_term(constant_config(1), 0), std::out_of_range);
  EXPECT_THROW(constant_config(0), std::invalid_argument);
}

// Every single-configuration quantity against the log-det oracle at the
// default feature map with N = 50.
TEST(OracleTest, RbfFifty) {
  const auto cfg = rbf_config(21, 50);
  const JointGaussian j = oracle::build_single_task(cfg);
  const auto train = oracle::train_labels(50);
  const ConfigurationAnalysis a(cfg);
  EXPECT_NEAR(a.cmi(), oracle::mi(j, {"y_test"}, {"W"}, train), 1e-8);
  EXPECT_NEAR(a.mi(), oracle::mi(j, {"W"}, train), 1e-8);
  for (std::size_t n = 0; n < 50; ++n) {
    oracle::Labels rest = train;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(n));
    EXPECT_NEAR(a.sens_test_point(static_cast<Index>(n)),
                oracle::mi(j, {"y_test"}, {train[n]}, rest), 1e-8);
    if (n + 1 < 50) {
      const oracle::Labels before(train.begin(), train.begin() + static_cast<std::ptrdiff_t>(n));
      EXPECT_NEAR(a.sens_chain_term(static_cast<Index>(n)),
                  oracle::mi(j, {train[n + 1]}, {train[n]}, before), 1e-8);
    }
  }
}

TEST(DecomposeTest, ConstantTwo) {
  const auto d = decompose(constant_config(2));
  EXPECT_NEAR(d.cmi, 0.1438410, 1e-7);
  EXPECT_NEAR(d.mi_over_n, 0.2746531, 1e-7);
  EXPECT_NEAR(d.sens_test_sum, 0.0588915, 1e-7);
  EXPECT_NEAR(d.sens_chain_sum, 0.0719205, 1e-7);
  EXPECT_LT(std::abs(d.residual), 1e-12);
}

TEST(DecomposeTest, ConstantThreeCountsSecondChainTermTwice) {
  const auto d = decompose(constant_config(3));
  EXPECT_NEAR(d.cmi, 0.1115718, 1e-7);
  EXPECT_NEAR(d.mi_over_n, 0.2310491, 1e-7);
  EXPECT_NEAR(d.sens_test_sum, 0.0322693, 1e-7);
  EXPECT_NEAR(d.sens_chain_sum, 0.0872080, 1e-7);
  ASSERT_EQ(d.chain_terms.size(), 2u);
  EXPECT_NEAR(d.sens_chain_sum, (d.chain_terms[0] + 2.0 * d.chain_terms[1]) / 3.0, 1e-15);
  EXPECT_LT(std::abs(d.residual), 1e-12);
}

TEST(DecomposeTest, ConstantExactUpTo64) {
  for (int n = 1; n <= 64; ++n) {
    EXPECT_LT(std::abs(decompose(constant_config(n)).residual), 1e-12) << "N=" << n;
  }
}

TEST(DecomposeTest, UnitWeightingBreaksIdentity) {
  // Dropping the multiplicity must be visible even on the smallest case
  // where it matters.
  EXPECT_GT(std::abs(decompose(constant_config(3), ChainWeighting::kUnit).residual), 1e-3);
  EXPECT_LT(std::abs(decompose(constant_config(2), ChainWeighting::kUnit).residual), 1e-12);
}

TEST(DecomposeTest, RbfMonteCarlo) {
  // The identity holds in expectation over inputs only.
  std::vector<double> resid;
  for (int s = 0; s < 4000; ++s) resid.push_back(decompose(rbf_config(1000 + s, 50)).residual);
  const MeanSe r = summarize(resid);
  EXPECT_LT(std::abs(r.mean), 3.0 * r.se) << r.mean << " +- " << r.se;
  // and genuinely fails per configuration
  EXPECT_GT(std::abs(resid.front()), 1e-6);
}

TEST(DecomposeTest, TermsNonNegative) {
  for (int s = 0; s < 200; ++s) {
    const auto d = decompose(rbf_config(5000 + s, 1 + s % 20));
    for (double v : d.per_point_sens) EXPECT_GE(v, -1e-12);
    for (double v : d.chain_terms) EXPECT_GE(v, -1e-12);
  }
}

TEST(BoundTest, Lemma1) {
  EXPECT_NEAR(bound_lemma1(constant_config(1)), 0.3465735903, 1e-10);
  EXPECT_NEAR(bound_lemma1(constant_config(3)), 0.2310490602, 1e-10);
}

TEST(BoundTest, TighterBound) {
  EXPECT_NEAR(bound_cor2(constant_config(2)), 0.2027326, 1e-7);
  EXPECT_NEAR(bound_cor2(constant_config(3)), 0.1438411, 1e-7);
}

TEST(BoundTest, OrderingOnRbf) {
  // cmi <= cor2 holds in expectation, so compare paired differences.
  for (int n : {2, 5, 20, 50}) {
    std::vector<double> slack_cor2, slack_lemma1;
    for (int s = 0; s < 500; ++s) {
      const auto cfg = rbf_config(9000 + s, n);
      slack_cor2.push_back(bound_cor2(cfg) - cmi_per_config(cfg));
      slack_lemma1.push_back(bound_lemma1(cfg) - bound_cor2(cfg));
    }
    const MeanSe a = summarize(slack_cor2);
    const MeanSe b = summarize(slack_lemma1);
    EXPECT_GT(a.mean, -3.0 * a.se) << n;
    EXPECT_GT(b.mean, 0.0) << n;
  }
}

TEST(SandwichTest, ConstantOnePoint) {
  const auto b = sens_bounds_thm2(constant_config(1), 0);
  EXPECT_NEAR(b.lower, 0.125, 1e-12);
  EXPECT_NEAR(b.upper, 1.0 / 6.0, 1e-12);
  const double value = sens_test_point(constant_config(1), 0);
  EXPECT_LT(b.lower, value);
  EXPECT_LT(value, b.upper);
}

TEST(SandwichTest, OrthogonalFeaturesGiveZero) {
  // phi(0) = 0 under the polynomial map, so the test point is independent of
  // every training point.
  const InputConfiguration cfg(BlrModel::isotropic(1.0, 1.0, FeatureMapSpec::polynomial(1)),
                               {0.5, -1.0, 2.0}, 0.0);
  for (Index n = 0; n < 3; ++n) {
    const auto b = sens_bounds_thm2(cfg, n);
    EXPECT_EQ(b.lower, 0.0);
    EXPECT_EQ(b.upper, 0.0);
    EXPECT_NEAR(sens_test_point(cfg, n), 0.0, 1e-15);
  }
}

TEST(SandwichTest, HoldsPointwiseOnRbf) {
  for (int s = 0; s < 200; ++s) {
    const ConfigurationAnalysis a(rbf_config(7000 + s, 50));
    for (Index n = 0; n < a.n(); ++n) {
      const auto b = a.sens_bounds(n);
      const double v = a.sens_test_point(n);
      EXPECT_LE(b.lower, v + 1e-12);
      EXPECT_LE(v, b.upper + 1e-12);
    }
  }
}

TEST(MerBoundTest, Values) {
  EXPECT_EQ(mer_subgaussian_bound(1.0, 0.0), 0.0);
  EXPECT_NEAR(mer_subgaussian_bound(0.5, 0.5), 0.7071067812, 1e-10);
  EXPECT_NEAR(mer_subgaussian_bound(2.0, 0.1438410), 0.7585276, 1e-7);
  EXPECT_THROW(mer_subgaussian_bound(0.0, 0.1), NegativeInput);
  EXPECT_THROW(mer_subgaussian_bound(1.0, -0.1), NegativeInput);
}

}  // namespace
}  // namespace infosens
