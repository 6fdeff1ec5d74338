// Copyright 2026 The secalloc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECALLOC_RANDOM_H_
#define SECALLOC_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace secalloc {

// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded random stream with platform-independent draws.
//
// The standard distributions are implementation-defined, so identical seeds
// could produce different archives under different standard libraries. All
// draws here are defined directly on top of the 64-bit Mersenne Twister.
class Random {
 public:
  explicit Random(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). Requires n > 0.
  size_t UniformIndex(size_t n) {
    const uint64_t bound = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<size_t>(x % bound);
  }

  // Uniform double in [0, 1) with 53 bits of resolution.
  double UniformReal() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Always consumes exactly one draw, including for p = 0 and p = 1.
  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename Container>
  const auto& Pick(const Container& items) {
    return items[UniformIndex(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace secalloc

#endif  // SECALLOC_RANDOM_H_
