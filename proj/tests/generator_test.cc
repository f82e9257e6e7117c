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

#include "doctest.h"
#include "efg2ludii/efg_parser.h"
#include "efg2ludii/errors.h"
#include "efg2ludii/game_stats.h"
#include "efg2ludii/generator.h"

namespace efg2ludii {
namespace {

TEST_CASE("generated games are valid and respect the parameters") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ExtensiveFormGame g = GenerateGame({}, seed);
    CAPTURE(seed);
    REQUIRE(ValidateGame(g).ok());
    GameStats s = ComputeStats(g);
    CHECK(s.num_states <= 400);
    CHECK(s.depth <= 8);
    CHECK(s.max_branching <= 4);
    CHECK(s.num_players >= 1);
    CHECK(s.num_players <= 4);
    const EfgNode& root = g.node(0);
    CHECK((root.IsChance() || (root.IsDecision() && root.mover == 1)));
  }
}

TEST_CASE("the seed determines the game") {
  CHECK(GenerateGame({}, 7) == GenerateGame({}, 7));
  CHECK(SerializeEfg(GenerateGame({}, 7)) == SerializeEfg(GenerateGame({}, 7)));
  CHECK_FALSE(GenerateGame({}, 7) == GenerateGame({}, 8));
}

TEST_CASE("information sets join states of equal depth, mover and branching") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ExtensiveFormGame g = GenerateGame({}, seed);
    const std::vector<int> depth = DepthTable(g);
    for (PlayerId p = 1; p <= g.num_players(); ++p) {
      for (const auto& set : g.partition(p).sets()) {
        for (StateId s : set) {
          CHECK(depth[s] == depth[set.front()]);
          CHECK(g.node(s).mover == g.node(set.front()).mover);
          CHECK(g.node(s).children.size() == g.node(set.front()).children.size());
          if (set.size() > 1) CHECK_FALSE(g.node(s).IsTerminal());
        }
      }
    }
  }
}

TEST_CASE("parameter extremes") {
  GeneratorParams p;
  p.max_nodes = 1;
  CHECK(GenerateGame(p, 1).num_states() == 1);
  p = {};
  p.merge_rate = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ExtensiveFormGame g = GenerateGame(p, seed);
    for (PlayerId q = 1; q <= g.num_players(); ++q) CHECK(g.partition(q).num_sets() == g.num_states());
  }
  p = {};
  p.chance_rate = 0.0;
  p.players = 2;
  ExtensiveFormGame g = GenerateGame(p, 3);
  CHECK(g.num_players() == 2);
  CHECK(ComputeStats(g).chance_states == 0);
  p = {};
  p.max_branching = 1;
  CHECK(ComputeStats(GenerateGame(p, 3)).max_branching == 1);
}

TEST_CASE("bad parameters are rejected") {
  GeneratorParams p;
  p.max_nodes = 0;
  CHECK_THROWS_AS(GenerateGame(p, 0), ArgumentError);
  p = {};
  p.chance_rate = 1.5;
  CHECK_THROWS_AS(GenerateGame(p, 0), ArgumentError);
  p = {};
  p.merge_rate = -0.1;
  CHECK_THROWS_AS(GenerateGame(p, 0), ArgumentError);
  p = {};
  p.max_branching = 0;
  CHECK_THROWS_AS(GenerateGame(p, 0), ArgumentError);
  p = {};
  p.players = -1;
  CHECK_THROWS_AS(GenerateGame(p, 0), ArgumentError);
}

TEST_CASE("statistics of the sample game") {
  ExtensiveFormGame g(2,
                      {MakeChanceNode(0, {1, 2}, {Rational(1, 2), Rational(1, 2)}),
                       MakeDecisionNode(1, 1, {3, 4, 5}), MakeTerminalNode(2, {Decimal(), Decimal()}),
                       MakeTerminalNode(3, {Decimal(), Decimal()}), MakeTerminalNode(4, {Decimal(), Decimal()}),
                       MakeTerminalNode(5, {Decimal(), Decimal()})},
                      {InformationPartition::FromSets(6, {{3, 4, 5}}), InformationPartition::Singletons(6)});
  GameStats s = ComputeStats(g);
  CHECK(s.decision_states == 1);
  CHECK(s.chance_states == 1);
  CHECK(s.terminal_states == 4);
  CHECK(s.trajectories == 4);
  CHECK(s.depth == 2);
  CHECK(s.max_branching == 3);
  CHECK(s.information_sets == std::vector<int>{4, 6});
  CHECK(s.largest_information_set == std::vector<int>{3, 1});
  CHECK(s.board_vertices == 18);
  CHECK(s.board_edges == 15);
  CHECK(s.regions == 3 + 12);
}

}  // namespace
}  // namespace efg2ludii
