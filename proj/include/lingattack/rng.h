// Copyright 2026 The lingattack Authors
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

#ifndef LINGATTACK_RNG_H_
#define LINGATTACK_RNG_H_

// Seeded randomness with results that do not depend on the standard
// library's distribution implementations.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace lingattack {

using Rng = std::mt19937_64;

uint64_t Fnv1a64(std::string_view bytes);
uint64_t SplitMix64(uint64_t x);

// Per-item seed so that results do not depend on processing order.
uint64_t DeriveSeed(uint64_t seed, std::string_view id);

// Uniform in [0, n); n > 0.
std::size_t UniformIndex(Rng& rng, std::size_t n);

// min(k, n) distinct indices of [0, n) in sampling order.
std::vector<std::size_t> SampleWithoutReplacement(Rng& rng, std::size_t n,
                                                  std::size_t k);

template <typename T>
void Shuffle(Rng& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[UniformIndex(rng, i)]);
  }
}

}  // namespace lingattack

#endif  // LINGATTACK_RNG_H_
