// Copyright (c) the PSWA Codec Project
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

#ifndef PSWA_RNG_H_
#define PSWA_RNG_H_

#include <cstdint>
#include <string_view>

namespace pswa {

// SplitMix64. Same seed, same sequence, every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 24-bit resolution (exact in f32).
  float next_uniform() {
    return float(next_u64() >> 40) * 0x1p-24f;
  }

  // Approximate standard normal: Irwin-Hall sum of 12 uniforms minus 6.
  // Exactly reproducible (additions only), tails clipped at +-6, which is
  // irrelevant for weight initialization.
  float next_normal() {
    float s = 0.0f;
    for (int i = 0; i < 12; ++i) s += next_uniform();
    return s - 6.0f;
  }

 private:
  uint64_t state_;
};

// FNV-1a, used to key per-parameter init streams and to hash file bytes.
inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(const void* data, size_t n) {
  uint64_t h = 0xCBF29CE484222325ULL;
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

// One independent stream per named parameter: adding parameters never
// reshuffles existing ones.
inline Rng rng_for_parameter(uint64_t global_seed, std::string_view name) {
  return Rng(global_seed ^ fnv1a64(name));
}

}  // namespace pswa

#endif  // PSWA_RNG_H_
