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

#include "infosens/feature_map.hpp"

#include <cmath>

namespace infosens {

FeatureMapSpec FeatureMapSpec::rbf(std::vector<double> centers) {
  if (centers.empty()) throw BadGrid("rbf map needs at least one center");
  FeatureMapSpec s;
  s.kind = FeatureKind::kRbfGrid;
  s.centers = std::move(centers);
  return s;
}

FeatureMapSpec FeatureMapSpec::polynomial(int degree) {
  if (degree < 1) throw BadGrid("polynomial degree must be at least 1");
  FeatureMapSpec s;
  s.kind = FeatureKind::kPolynomial;
  s.degree = degree;
  return s;
}

FeatureMapSpec FeatureMapSpec::constant() { return {}; }

Index FeatureMapSpec::dim() const {
  switch (kind) {
    case FeatureKind::kRbfGrid:
      return static_cast<Index>(centers.size());
    case FeatureKind::kPolynomial:
      return degree;
    case FeatureKind::kConstant:
      return 1;
  }
  return 0;
}

FeatureMapSpec make_rbf_grid(int d, double lo, double hi) {
  if (d < 1) throw BadGrid("rbf grid needs d >= 1");
  if (d == 1) {
    if (lo != hi) throw BadGrid("a single center cannot span a non-degenerate interval");
    return FeatureMapSpec::rbf({lo});
  }
  if (!(lo < hi)) throw BadGrid("rbf grid needs lo < hi");
  std::vector<double> centers(static_cast<std::size_t>(d));
  const double step = (hi - lo) / static_cast<double>(d - 1);
  for (int i = 0; i < d; ++i) {
    centers[static_cast<std::size_t>(i)] = lo + step * i;
  }
  centers.back() = hi;
  return FeatureMapSpec::rbf(std::move(centers));
}

Vector eval(const FeatureMapSpec& spec, double x) {
  Vector phi(spec.dim());
  switch (spec.kind) {
    case FeatureKind::kRbfGrid:
      for (Index i = 0; i < phi.size(); ++i) {
        const double r = x - spec.centers[static_cast<std::size_t>(i)];
        phi(i) = std::exp(-0.5 * r * r);
      }
      break;
    case FeatureKind::kPolynomial: {
      double p = 1.0;
      for (Index i = 0; i < phi.size(); ++i) {
        p *= x;
        phi(i) = p;
      }
      break;
    }
    case FeatureKind::kConstant:
      phi(0) = 1.0;
      break;
  }
  return phi;
}

Matrix design_matrix(const FeatureMapSpec& spec, std::span<const double> inputs) {
  Matrix phi(static_cast<Index>(inputs.size()), spec.dim());
  for (std::size_t n = 0; n < inputs.size(); ++n) {
    phi.row(static_cast<Index>(n)) = eval(spec, inputs[n]).transpose();
  }
  return phi;
}

std::string to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kRbfGrid:
      return "rbf_grid";
    case FeatureKind::kPolynomial:
      return "polynomial";
    case FeatureKind::kConstant:
      return "constant";
  }
  return "unknown";
}

FeatureKind feature_kind_from_string(const std::string& name) {
  if (name == "rbf_grid" || name == "rbf") return FeatureKind::kRbfGrid;
  if (name == "polynomial") return FeatureKind::kPolynomial;
  if (name == "constant") return FeatureKind::kConstant;
  throw ConfigError("unknown feature map kind: " + name);
}

}  // namespace infosens
