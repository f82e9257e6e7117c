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

#ifndef EFG2LUDII_EMITTER_H_
#define EFG2LUDII_EMITTER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efg2ludii/efg.h"
#include "efg2ludii/ludeme.h"
#include "efg2ludii/rational.h"

namespace efg2ludii {

// Board vertex of state i inside player p's copy of the tree (p = 0 is the
// neutral copy that tracks the true state).
int VertexIndex(PlayerId p, StateId i, int num_states);

// Smallest positive integers whose ratios reproduce `probs` exactly.
std::vector<BigInt> ProbabilitiesToWeights(std::span<const Rational> probs);

std::string SubgraphRegion(PlayerId p);
std::string InformationSetRegion(StateId i, PlayerId p);

// A compiled game description. `root` is the `(game ...)` term.
struct LudiiDescription {
  Ludeme root;

  std::string Render() const { return RenderLudeme(root); }
  bool operator==(const LudiiDescription& other) const = default;
};

// The pieces of the description. All require a valid game whose root is a
// chance node or a decision node of player 1.
Ludeme EmitEquipment(const ExtensiveFormGame& game);
Ludeme EmitStartRules(const ExtensiveFormGame& game);
// The move for taking `branch` (0-based) from state i to its child j.
Ludeme EmitMoveRule(const ExtensiveFormGame& game, StateId i, int branch,
                    StateId j);
Ludeme EmitPlayRules(const ExtensiveFormGame& game);
Ludeme EmitEndRules(const ExtensiveFormGame& game);

// The full `(game ...)` description. Throws InvalidGameError if the game is
// invalid or its root is a decision node of a player other than 1.
LudiiDescription Compile(const ExtensiveFormGame& game,
                         std::string_view name = "Game");

// Keeps ASCII letters and digits; falls back to "Game" if nothing is left.
std::string SanitizeGameName(std::string_view stem);

}  // namespace efg2ludii

#endif  // EFG2LUDII_EMITTER_H_
