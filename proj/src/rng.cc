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

#include "efg2ludii/rng.h"

#include <limits>

#include "efg2ludii/errors.h"

namespace efg2ludii {

std::uint64_t SplitMix64::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("UniformBelow needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

BigInt SplitMix64::UniformBelow(const BigInt& bound) {
  if (bound <= 0) throw ArgumentError("UniformBelow needs a positive bound");
  if (bound <= std::numeric_limits<std::uint64_t>::max()) {
    return BigInt(UniformBelow(static_cast<std::uint64_t>(bound)));
  }
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  for (;;) {
    BigInt r = 0;
    for (unsigned w = 0; w < words; ++w) r = (r << 64) | BigInt(Next());
    r &= (BigInt(1) << bits) - 1;
    if (r < bound) return r;
  }
}

}  // namespace efg2ludii
