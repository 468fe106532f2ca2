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

#ifndef INFOSENS_CONFIG_HPP_
#define INFOSENS_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "infosens/feature_map.hpp"

namespace infosens {

enum class Mode { kSingleTask, kMeta, kBounds, kOracleCheck };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

struct FeatureMapConfig {
  FeatureKind kind = FeatureKind::kRbfGrid;
  int d = 10;
  double lo = -2.0;
  double hi = 2.0;
  int degree = 3;

  FeatureMapSpec build() const;
};

struct ExperimentConfig {
  Mode mode = Mode::kSingleTask;
  bool mode_given = false;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  FeatureMapConfig feature_map;
  int input_dim = 1;
  std::vector<int> n_grid = {2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  std::vector<int> m_grid = {1, 2, 5, 10, 20, 50};
  int meta_fixed_n = 50;
  int meta_fixed_m = 20;
  int mc_samples = 1000;
  std::uint64_t seed = 0;
  // false replaces the chain multiplicity by 1; only useful as a mutation
  // that the audits must catch
  bool chain_multiplicity = true;
  bool audit_meta = true;
  int oracle_configs = 200;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

/// Parses a JSON object. Unknown keys are rejected so typos do not pass
/// silently.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace infosens

#endif  // INFOSENS_CONFIG_HPP_
