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

#include "efg2ludii/game_stats.h"

#include <algorithm>
#include <sstream>

namespace efg2ludii {

GameStats ComputeStats(const ExtensiveFormGame& game) {
  GameStats s;
  const int k = game.num_players();
  const long long n = game.num_states();
  s.num_players = k;
  s.num_states = game.num_states();
  for (const EfgNode& node : game.nodes()) {
    switch (node.kind) {
      case NodeKind::kDecision: ++s.decision_states; break;
      case NodeKind::kChance: ++s.chance_states; break;
      case NodeKind::kTerminal: ++s.terminal_states; break;
    }
    s.max_branching = std::max(s.max_branching, static_cast<int>(node.children.size()));
  }
  const std::vector<int> depth = DepthTable(game);
  s.depth = depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
  s.trajectories = s.terminal_states;
  for (PlayerId p = 1; p <= k; ++p) {
    const InformationPartition& part = game.partition(p);
    s.information_sets.push_back(part.num_sets());
    std::size_t largest = 0;
    for (const auto& set : part.sets()) largest = std::max(largest, set.size());
    s.largest_information_set.push_back(static_cast<int>(largest));
  }
  s.board_vertices = (k + 1) * n;
  s.board_edges = (k + 1) * (n - 1);
  s.regions = (k + 1) + k * n;
  return s;
}

std::string GameStats::ToRecords() const {
  std::ostringstream os;
  os << "players=" << num_players << "\n"
     << "states=" << num_states << "\n"
     << "decision_states=" << decision_states << "\n"
     << "chance_states=" << chance_states << "\n"
     << "terminal_states=" << terminal_states << "\n"
     << "depth=" << depth << "\n"
     << "trajectories=" << trajectories << "\n"
     << "max_branching=" << max_branching << "\n";
  for (std::size_t p = 0; p < information_sets.size(); ++p) {
    os << "player=" << p + 1 << " information_sets=" << information_sets[p]
       << " largest=" << largest_information_set[p] << "\n";
  }
  os << "board_vertices=" << board_vertices << "\n"
     << "board_edges=" << board_edges << "\n"
     << "regions=" << regions << "\n";
  return os.str();
}

}  // namespace efg2ludii
