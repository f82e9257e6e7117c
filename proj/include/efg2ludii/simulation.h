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

#ifndef EFG2LUDII_SIMULATION_H_
#define EFG2LUDII_SIMULATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "efg2ludii/interpreter.h"

namespace efg2ludii {

struct SimulationResult {
  std::uint64_t seed = 0;
  std::vector<PlayoutResult> playouts;
  // Index p - 1.
  std::vector<double> mean_payoffs;

  // Per step: `playout=i step=t before=u select=j after=v`; per playout a
  // leaf record with the payoffs; finally the mean payoffs.
  std::string ToRecords() const;
  std::string ToSummary() const;
};

// Playout i uses DeriveSeed(seed, i) and uniform choices, so the result only
// depends on the description, n and the seed.
SimulationResult Simulate(const LudiiAst& ast, std::uint64_t n, std::uint64_t seed);

}  // namespace efg2ludii

#endif  // EFG2LUDII_SIMULATION_H_
