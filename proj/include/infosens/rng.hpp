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

// Counter-based random streams. A stream is identified by a root seed plus a
// tuple of integer ids (sample index, slot, ...) and never by the order in
// which streams are created, so concurrent or reordered evaluation cannot
// change any drawn value.

#ifndef INFOSENS_RNG_HPP_
#define INFOSENS_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

#include "infosens/gaussian.hpp"

namespace infosens {

std::uint64_t splitmix64(std::uint64_t x);

/// Hashes (root, ids...) into an engine seed.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> ids);

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t root, std::initializer_list<std::uint64_t> ids)
      : engine_(derive_seed(root, ids)) {}

  double normal() { return normal_(engine_); }
  Vector normal_vector(Index k);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// One draw from g via its Cholesky factor.
Vector sample(const GaussianDist& g, RandomStream& rng);

}  // namespace infosens

#endif  // INFOSENS_RNG_HPP_
