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

#include "infosens/stats.hpp"

#include <cmath>
#include <limits>

namespace infosens {

double MeanSe::z() const {
  if (se > 0.0) return std::abs(mean) / se;
  return mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

MeanSe summarize(std::span<const double> values) {
  MeanSe out;
  out.count = values.size();
  if (values.empty()) return out;
  // Welford, in index order so results do not depend on evaluation order.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double v : values) {
    ++k;
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  out.mean = mean;
  if (k > 1) {
    const double sd = std::sqrt(m2 / static_cast<double>(k - 1));
    out.se = sd / std::sqrt(static_cast<double>(k));
  }
  return out;
}

}  // namespace infosens
