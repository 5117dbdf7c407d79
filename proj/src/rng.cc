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

#include "lingattack/rng.h"

namespace lingattack {

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t seed, std::string_view id) {
  return SplitMix64(seed ^ SplitMix64(Fnv1a64(id)));
}

std::size_t UniformIndex(Rng& rng, std::size_t n) {
  const uint64_t range = static_cast<uint64_t>(n);
  // 2^64 mod range; values below it would bias the modulo.
  const uint64_t threshold = (0 - range) % range;
  uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return static_cast<std::size_t>(x % range);
}

std::vector<std::size_t> SampleWithoutReplacement(Rng& rng, std::size_t n,
                                                  std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  const std::size_t take = k < n ? k : n;
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(pool[i], pool[i + UniformIndex(rng, n - i)]);
  }
  pool.resize(take);
  return pool;
}

}  // namespace lingattack
