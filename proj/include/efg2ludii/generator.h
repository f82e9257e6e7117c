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

#ifndef EFG2LUDII_GENERATOR_H_
#define EFG2LUDII_GENERATOR_H_

#include <cstdint>

#include "efg2ludii/efg.h"

namespace efg2ludii {

struct GeneratorParams {
  int max_nodes = 400;
  int max_branching = 4;
  // Probability that an inner state is a chance state.
  double chance_rate = 0.3;
  // Probability that a compatible state joins the information set being
  // built instead of starting a new one.
  double merge_rate = 0.5;
  // 0 draws the player count uniformly from 1..4.
  int players = 0;
  int max_depth = 8;
};

// Throws ArgumentError for out-of-range parameters.
void ValidateParams(const GeneratorParams& params);

// A random valid game. States are numbered breadth-first, the root is a
// chance state or a decision of player 1, and information sets only join
// states of equal depth, mover and branching factor.
ExtensiveFormGame GenerateGame(const GeneratorParams& params, std::uint64_t seed);

}  // namespace efg2ludii

#endif  // EFG2LUDII_GENERATOR_H_
