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

#ifndef EFG2LUDII_GAME_STATS_H_
#define EFG2LUDII_GAME_STATS_H_

#include <string>
#include <vector>

#include "efg2ludii/efg.h"

namespace efg2ludii {

struct GameStats {
  int num_players = 0;
  int num_states = 0;
  int decision_states = 0;
  int chance_states = 0;
  int terminal_states = 0;
  int depth = 0;
  // One per leaf, since the game is a tree.
  int trajectories = 0;
  int max_branching = 0;
  // Index p - 1.
  std::vector<int> information_sets;
  std::vector<int> largest_information_set;
  // Vertices and regions of the compiled board.
  long long board_vertices = 0;
  long long board_edges = 0;
  long long regions = 0;

  std::string ToRecords() const;
};

// Requires a valid game.
GameStats ComputeStats(const ExtensiveFormGame& game);

}  // namespace efg2ludii

#endif  // EFG2LUDII_GAME_STATS_H_
