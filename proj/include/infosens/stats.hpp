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

#ifndef INFOSENS_STATS_HPP_
#define INFOSENS_STATS_HPP_

#include <cstddef>
#include <span>

namespace infosens {

/// Monte-Carlo mean with standard error sd / sqrt(count), where sd is the
/// sample standard deviation (n - 1 denominator).
struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
  std::size_t count = 0;

  /// |mean| / se, or +inf when se == 0 and mean != 0.
  double z() const;
};

MeanSe summarize(std::span<const double> values);

}  // namespace infosens

#endif  // INFOSENS_STATS_HPP_
