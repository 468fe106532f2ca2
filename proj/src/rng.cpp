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

#include "infosens/rng.hpp"

namespace infosens {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> ids) {
  std::uint64_t h = splitmix64(root);
  for (std::uint64_t id : ids) {
    h = splitmix64(h ^ splitmix64(id + 0x632be59bd9b4e019ULL));
  }
  return h;
}

Vector RandomStream::normal_vector(Index k) {
  Vector z(k);
  for (Index i = 0; i < k; ++i) z(i) = normal();
  return z;
}

Vector sample(const GaussianDist& g, RandomStream& rng) {
  const Vector z = rng.normal_vector(g.dim());
  return g.mean + g.cov.llt().matrixL() * z;
}

}  // namespace infosens
