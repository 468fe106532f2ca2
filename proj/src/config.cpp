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

#include "infosens/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "infosens/errors.hpp"

namespace infosens {
namespace {

using nlohmann::json;

template <typename T>
T get(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

void check_grid(const std::vector<int>& grid, int min_value, const char* name) {
  if (grid.empty()) throw ConfigError(std::string(name) + " must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < min_value) {
      throw ConfigError(std::string(name) + " entries must be >= " + std::to_string(min_value));
    }
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw ConfigError(std::string(name) + " must be strictly increasing");
    }
  }
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kSingleTask: return "single_task";
    case Mode::kMeta: return "meta";
    case Mode::kBounds: return "bounds";
    case Mode::kOracleCheck: return "oracle_check";
  }
  return "unknown";
}

Mode mode_from_string(const std::string& name) {
  if (name == "single_task") return Mode::kSingleTask;
  if (name == "meta") return Mode::kMeta;
  if (name == "bounds") return Mode::kBounds;
  if (name == "oracle_check") return Mode::kOracleCheck;
  throw ConfigError("unknown mode '" + name + "'");
}

FeatureMapSpec FeatureMapConfig::build() const {
  try {
    switch (kind) {
      case FeatureKind::kRbfGrid: return make_rbf_grid(d, lo, hi);
      case FeatureKind::kPolynomial: return FeatureMapSpec::polynomial(degree);
      case FeatureKind::kConstant: return FeatureMapSpec::constant();
    }
  } catch (const BadGrid& e) {
    throw ConfigError(std::string("feature_map: ") + e.what());
  }
  throw ConfigError("feature_map: unknown kind");
}

void ExperimentConfig::validate() const {
  check_positive(alpha, "alpha");
  check_positive(beta, "beta");
  check_positive(gamma, "gamma");
  if (input_dim != 1) throw ConfigError("only input_dim = 1 is supported");
  check_grid(n_grid, 1, "N_grid");
  check_grid(m_grid, 0, "M_grid");
  if (meta_fixed_n < 1) throw ConfigError("meta_fixed_N must be >= 1");
  if (meta_fixed_m < 0) throw ConfigError("meta_fixed_M must be >= 0");
  if (mc_samples < 1) throw ConfigError("mc_samples must be >= 1");
  if (oracle_configs < 1) throw ConfigError("oracle_configs must be >= 1");
  (void)feature_map.build();
}

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known = {
      "mode",         "alpha",        "beta",         "gamma",
      "feature_map",  "input_dim",    "N_grid",       "M_grid",
      "meta_fixed_N", "meta_fixed_M", "mc_samples",   "seed",
      "chain_multiplicity", "audit_meta", "oracle_configs"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw ConfigError("unknown key '" + item.key() + "'");
  }

  ExperimentConfig c;
  if (j.contains("mode")) {
    c.mode = mode_from_string(get<std::string>(j, "mode", ""));
    c.mode_given = true;
  }
  c.alpha = get(j, "alpha", c.alpha);
  c.beta = get(j, "beta", c.beta);
  c.gamma = get(j, "gamma", c.gamma);
  c.input_dim = get(j, "input_dim", c.input_dim);
  c.n_grid = get(j, "N_grid", c.n_grid);
  c.m_grid = get(j, "M_grid", c.m_grid);
  c.meta_fixed_n = get(j, "meta_fixed_N", c.meta_fixed_n);
  c.meta_fixed_m = get(j, "meta_fixed_M", c.meta_fixed_m);
  c.mc_samples = get(j, "mc_samples", c.mc_samples);
  if (j.contains("seed") && !j.at("seed").is_number_unsigned()) {
    throw ConfigError("seed must be a non-negative integer");
  }
  c.seed = get(j, "seed", c.seed);
  c.chain_multiplicity = get(j, "chain_multiplicity", c.chain_multiplicity);
  c.audit_meta = get(j, "audit_meta", c.audit_meta);
  c.oracle_configs = get(j, "oracle_configs", c.oracle_configs);

  if (j.contains("feature_map")) {
    const json& fm = j.at("feature_map");
    if (!fm.is_object()) throw ConfigError("feature_map must be an object");
    for (const auto& item : fm.items()) {
      static const std::set<std::string> fm_keys = {"kind", "d", "lo", "hi", "degree"};
      if (!fm_keys.count(item.key())) {
        throw ConfigError("unknown feature_map key '" + item.key() + "'");
      }
    }
    auto& f = c.feature_map;
    f.kind = feature_kind_from_string(get<std::string>(fm, "kind", to_string(f.kind)));
    f.d = get(fm, "d", f.d);
    f.lo = get(fm, "lo", f.lo);
    f.hi = get(fm, "hi", f.hi);
    f.degree = get(fm, "degree", f.degree);
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace infosens
