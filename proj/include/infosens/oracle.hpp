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

// Brute-force ground truth. Every random variable of a configuration is laid
// out in one joint Gaussian over named blocks, and information quantities
// come from log-determinants of conditional covariances.
//
// Block names: "W" parameter of the (meta-test) task, "y_train[n]", "y_test",
// and for the meta model "U", "W_task[m]", "y_task[m][n]".

#ifndef INFOSENS_ORACLE_HPP_
#define INFOSENS_ORACLE_HPP_

#include <string>
#include <vector>

#include "infosens/gaussian.hpp"
#include "infosens/info.hpp"
#include "infosens/meta.hpp"

namespace infosens::oracle {

using Labels = std::vector<std::string>;

/// Joint of (W, y_train[0..N), y_test) under the configuration's prior.
JointGaussian build_single_task(const InputConfiguration& cfg);

/// As build_single_task plus "W_tilde", a draw from p(w | y_train).
JointGaussian build_with_resample(const InputConfiguration& cfg);

/// Joint of (U, W_task[m], W, y_task[m][n], y_train[n], y_test); the
/// meta-test task is one more task drawn around U.
JointGaussian build_meta(const MetaConfiguration& cfg);

Labels train_labels(Index n);
Labels task_labels(Index m, Index n);
Labels concat(Labels a, const Labels& b);

/// H(target | given) in nats.
double cond_entropy(const JointGaussian& j, const Labels& target, const Labels& given);

/// I(A; B | given) in nats.
double mi(const JointGaussian& j, const Labels& a, const Labels& b, const Labels& given = {});

/// KL(p(w~ | w) p(y | w) || p(w~, y | w)) for a posterior resample w~,
/// evaluated directly on the conditional joint.
double lautum_kl_form(const InputConfiguration& cfg);

}  // namespace infosens::oracle

#endif  // INFOSENS_ORACLE_HPP_
