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

#ifndef EFG2LUDII_TESTS_SUPPORT_H_
#define EFG2LUDII_TESTS_SUPPORT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "efg2ludii/efg.h"
#include "efg2ludii/ludeme.h"

namespace efg2ludii::testing {

// Three players; a decision root with two long single-child chains ending in
// terminal states 88 and 2077.
ExtensiveFormGame TwoChainGame();

// The end rules expected for TwoChainGame, as printed in the original
// construction (whitespace included).
extern const char kTwoChainEndRules[];

// A description outside the construction subset.
extern const char kTicTacToe[];

// Two players; chance root with probabilities 1/3 and 2/3, each leading to a
// terminal state.
ExtensiveFormGame ThirdsGame();

// Small hand-built game with chance, two players and non-singleton
// information sets for both players.
ExtensiveFormGame SmallImperfectGame();
extern const char kSmallImperfectEfg[];

// Seeds of the first `count` generated games (default parameters) that have
// at least one chance state and one non-singleton information set.
std::vector<std::uint64_t> SuiteSeeds(int count, std::uint64_t first_seed = 1);

// Description mutations. Each edits the first applicable spot of a compiled
// `(game ...)` term and returns false if nothing applies.
//
// Changes the next player of a move into a decision state.
bool MutateNextPlayer(Ludeme& game, const ExtensiveFormGame& source);
// Deletes the last move of an `(or {...})` with at least two moves.
bool MutateDeleteMove(Ludeme& game);
// Adds one to the first weight of a `(random ...)` with at least two branches.
bool MutateWeight(Ludeme& game);
// Changes the first payoff literal.
bool MutatePayoff(Ludeme& game);
// Removes every `(set Hidden ...)` effect from the move rules.
bool StripHiding(Ludeme& game);

}  // namespace efg2ludii::testing

#endif  // EFG2LUDII_TESTS_SUPPORT_H_
