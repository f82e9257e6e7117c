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

#include "support.h"

#include <functional>

#include "efg2ludii/game_stats.h"
#include "efg2ludii/generator.h"

namespace efg2ludii::testing {
namespace {

// Pre-order walk; stops as soon as `fn` returns true.
bool FindTerm(Ludeme& node, const std::function<bool(Ludeme&)>& fn) {
  if (fn(node)) return true;
  for (Ludeme& child : node.children) {
    if (FindTerm(child, fn)) return true;
  }
  return false;
}

Ludeme* Child(Ludeme& term, std::string_view head) {
  for (Ludeme& c : term.children) {
    if (c.IsTerm(head)) return &c;
  }
  return nullptr;
}

}  // namespace

ExtensiveFormGame TwoChainGame() {
  constexpr int kStates = 2078;
  std::vector<EfgNode> nodes;
  nodes.push_back(MakeDecisionNode(0, 1, {1, 89}));
  for (StateId s = 1; s < kStates; ++s) {
    if (s == 88) {
      nodes.push_back(MakeTerminalNode(
          s, {Decimal::Parse("-1"), Decimal::Parse("0.5"), Decimal::Parse("1")}));
    } else if (s == 2077) {
      nodes.push_back(MakeTerminalNode(
          s, {Decimal::Parse("10"), Decimal::Parse("12"), Decimal::Parse("2020")}));
    } else {
      nodes.push_back(MakeDecisionNode(s, 1 + s % 3, {s + 1}));
    }
  }
  return ExtensiveFormGame(3, std::move(nodes));
}

const char kTwoChainEndRules[] = R"((end {
  (if (= (where "Marker" Neutral) 88) 
    (payoffs {
      (payoff P1 -1) 
      (payoff P2 0.5) 
      (payoff P3 1)
    })
  )
  (if (= (where "Marker" Neutral) 2077) 
    (payoffs {
      (payoff P1 10) 
      (payoff P2 12) 
      (payoff P3 2020)
    })
  )
}))";

const char kTicTacToe[] = R"((game "Tic-Tac-Toe"
  (players 2)
  (equipment {
    (board (square 3))
    (piece "Disc" P1)
    (piece "Cross" P2)
  })
  (rules
    (play (move Add (to (sites Empty))))
    (end (if (is Line 3) (result Mover win)))
  )
))";

ExtensiveFormGame ThirdsGame() {
  return ExtensiveFormGame(
      2, {MakeChanceNode(0, {1, 2}, {Rational(1, 3), Rational(2, 3)}),
          MakeTerminalNode(1, {Decimal::Parse("1"), Decimal::Parse("-1")}),
          MakeTerminalNode(2, {Decimal::Parse("-1"), Decimal::Parse("1")})});
}

const char kSmallImperfectEfg[] = R"(; Nature deals, player 1 cannot see the deal, player 2 cannot see
; player 1's first choice.
(efg 1 (players 2))
(chance 0 (1/3 -> 1) (2/3 -> 2))
(decision 1 (mover 1) (children 3 4))
(decision 2 (mover 1) (children 5 6))
(decision 3 (mover 2) (children 7 8))
(terminal 4 (payoffs 1 -1))
(decision 5 (mover 2) (children 9 10))
(terminal 6 (payoffs -1 1))
(terminal 7 (payoffs 2 -2))
(terminal 8 (payoffs 0 0))
(terminal 9 (payoffs 1.5 -1.5))
(terminal 10 (payoffs 0 0))
(infoset 1 (1 2))
(infoset 2 (3 5))
)";

ExtensiveFormGame SmallImperfectGame() {
  std::vector<EfgNode> nodes = {
      MakeChanceNode(0, {1, 2}, {Rational(1, 3), Rational(2, 3)}),
      MakeDecisionNode(1, 1, {3, 4}),
      MakeDecisionNode(2, 1, {5, 6}),
      MakeDecisionNode(3, 2, {7, 8}),
      MakeTerminalNode(4, {Decimal::Parse("1"), Decimal::Parse("-1")}),
      MakeDecisionNode(5, 2, {9, 10}),
      MakeTerminalNode(6, {Decimal::Parse("-1"), Decimal::Parse("1")}),
      MakeTerminalNode(7, {Decimal::Parse("2"), Decimal::Parse("-2")}),
      MakeTerminalNode(8, {Decimal::Parse("0"), Decimal::Parse("0")}),
      MakeTerminalNode(9, {Decimal::Parse("1.5"), Decimal::Parse("-1.5")}),
      MakeTerminalNode(10, {Decimal::Parse("0"), Decimal::Parse("0")}),
  };
  return ExtensiveFormGame(2, std::move(nodes),
                           {InformationPartition::FromSets(11, {{1, 2}}),
                            InformationPartition::FromSets(11, {{3, 5}})});
}

std::vector<std::uint64_t> SuiteSeeds(int count, std::uint64_t first_seed) {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t seed = first_seed; static_cast<int>(seeds.size()) < count; ++seed) {
    GameStats stats = ComputeStats(GenerateGame({}, seed));
    bool merged = false;
    for (int largest : stats.largest_information_set) merged |= largest > 1;
    if (stats.chance_states > 0 && merged) seeds.push_back(seed);
  }
  return seeds;
}

bool MutateNextPlayer(Ludeme& game, const ExtensiveFormGame& source) {
  const int k = source.num_players();
  if (k < 2) return false;
  return FindTerm(game, [&](Ludeme& move) {
    if (!move.IsTerm("move")) return false;
    bool done = false;
    FindTerm(move, [&](Ludeme& effects) {
      if (!effects.IsTerm("and")) return false;
      Ludeme& list = effects.children.at(0);
      int target = -1;
      for (Ludeme& e : list.children) {
        if (e.IsTerm("fromTo")) target = std::stoi(Child(e, "to")->children.at(0).text);
      }
      if (target < 0 || !source.node(target).IsDecision()) return true;
      for (Ludeme& e : list.children) {
        if (e.IsTerm("set") && e.children.at(0).text == "NextPlayer") {
          Ludeme& player = e.children.at(1).children.at(0);
          player = Ludeme::Int(std::stoi(player.text) % k + 1);
          done = true;
        }
      }
      return true;
    });
    return done;
  });
}

bool MutateDeleteMove(Ludeme& game) {
  return FindTerm(game, [](Ludeme& term) {
    if (!term.IsTerm("or") || term.children.empty()) return false;
    Ludeme& moves = term.children[0];
    if (moves.children.size() < 2) return false;
    moves.children.pop_back();
    return true;
  });
}

bool MutateWeight(Ludeme& game) {
  return FindTerm(game, [](Ludeme& term) {
    if (!term.IsTerm("random") || term.children.size() < 2) return false;
    Ludeme& weights = term.children[0];
    if (weights.children.size() < 2) return false;
    Ludeme& w = weights.children[0];
    w = Ludeme::Integer((ParseBigInt(w.text) + 1).str());
    return true;
  });
}

bool MutatePayoff(Ludeme& game) {
  return FindTerm(game, [](Ludeme& term) {
    if (!term.IsTerm("payoff") || term.children.size() < 2) return false;
    Ludeme& value = term.children[1];
    value = Ludeme::Integer(value.text == "0" ? "1" : "0");
    return true;
  });
}

bool StripHiding(Ludeme& game) {
  bool stripped = false;
  FindTerm(game, [&](Ludeme& term) {
    if (!term.IsTerm("and")) return false;
    std::vector<Ludeme>& effects = term.children.at(0).children;
    const std::size_t before = effects.size();
    std::erase_if(effects, [](const Ludeme& e) {
      return e.IsTerm("set") && !e.children.empty() && e.children[0].text == "Hidden";
    });
    stripped |= effects.size() != before;
    return false;
  });
  return stripped;
}

}  // namespace efg2ludii::testing
