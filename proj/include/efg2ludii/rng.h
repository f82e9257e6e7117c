// Copyright 2026 The efg2ludii Authors
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

#ifndef EFG2LUDII_RNG_H_
#define EFG2LUDII_RNG_H_

#include <cstdint>

#include "efg2ludii/rational.h"

namespace efg2ludii {

// SplitMix64 (Steele, Lea and Flood). The whole state is one 64-bit word, so
// a seed reproduces the same stream on every platform. Bounded draws use
// rejection sampling rather than a plain modulo to stay unbiased.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += kGamma);
    return Mix(z);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);
  BigInt UniformBelow(const BigInt& bound);
  // Uniform in [0, 1) with 53 bits of precision.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // An independent generator; advances this one by a single step.
  SplitMix64 Split() { return SplitMix64(Next()); }

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Seed for the `index`-th of several independent runs sharing one base seed.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::Mix(seed + (index + 1) * SplitMix64::kGamma);
}

}  // namespace efg2ludii

#endif  // EFG2LUDII_RNG_H_
