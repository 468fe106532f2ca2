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

#ifndef INFOSENS_FEATURE_MAP_HPP_
#define INFOSENS_FEATURE_MAP_HPP_

#include <span>
#include <string>
#include <vector>

#include "infosens/gaussian.hpp"

namespace infosens {

enum class FeatureKind { kRbfGrid, kPolynomial, kConstant };

/// Scalar-input feature maps phi: R -> R^d.
///
///   rbf_grid:   phi_i(x) = exp(-(x - mu_i)^2 / 2), unit width
///   polynomial: phi_i(x) = x^i, i = 1..degree (no constant term)
///   constant:   phi(x) = [1]
struct FeatureMapSpec {
  FeatureKind kind = FeatureKind::kConstant;
  std::vector<double> centers;  // rbf only
  int degree = 0;               // polynomial only

  static FeatureMapSpec rbf(std::vector<double> centers);
  static FeatureMapSpec polynomial(int degree);
  static FeatureMapSpec constant();

  Index dim() const;
};

/// d centers evenly spaced on [lo, hi], endpoints included.
FeatureMapSpec make_rbf_grid(int d, double lo, double hi);

Vector eval(const FeatureMapSpec& spec, double x);

/// N x d matrix whose n-th row is eval(spec, inputs[n]).
Matrix design_matrix(const FeatureMapSpec& spec, std::span<const double> inputs);

std::string to_string(FeatureKind kind);
FeatureKind feature_kind_from_string(const std::string& name);

}  // namespace infosens

#endif  // INFOSENS_FEATURE_MAP_HPP_
