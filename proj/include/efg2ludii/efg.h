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

#ifndef EFG2LUDII_EFG_H_
#define EFG2LUDII_EFG_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efg2ludii/decimal.h"
#include "efg2ludii/rational.h"

namespace efg2ludii {

// 0 is nature; 1..k are the regular players.
using PlayerId = int;
// Index of a game state; the initial state is 0 and ids are contiguous.
using StateId = int;
// Stable index of an information set within one player's partition.
using InfosetId = int;

inline constexpr PlayerId kNature = 0;
inline constexpr int kMaxPlayers = 100;
inline constexpr int kMaxStates = 1000000;

enum class NodeKind { kDecision, kChance, kTerminal };

struct EfgNode {
  StateId id = 0;
  NodeKind kind = NodeKind::kTerminal;
  // 1..k for decision nodes, kNature for chance nodes, unused for terminals.
  PlayerId mover = kNature;
  std::vector<StateId> children;
  // Parallel to `children`; chance nodes only.
  std::vector<Rational> chance_probs;
  // Length k; terminal nodes only.
  std::vector<Decimal> payoffs;

  bool IsTerminal() const { return kind == NodeKind::kTerminal; }
  bool IsChance() const { return kind == NodeKind::kChance; }
  bool IsDecision() const { return kind == NodeKind::kDecision; }

  bool operator==(const EfgNode& other) const = default;
};

EfgNode MakeDecisionNode(StateId id, PlayerId mover,
                         std::vector<StateId> children);
EfgNode MakeChanceNode(StateId id, std::vector<StateId> children,
                       std::vector<Rational> probs);
EfgNode MakeTerminalNode(StateId id, std::vector<Decimal> payoffs);

// One player's partition of all states into information sets. The
// representation is canonical: sets are ordered by their smallest member and
// members are ascending, so two equal partitions compare equal.
class InformationPartition {
 public:
  InformationPartition() = default;

  // States not mentioned in `sets` become singletons. Throws ArgumentError on
  // out-of-range or repeated states.
  static InformationPartition FromSets(int num_states,
                                       std::vector<std::vector<StateId>> sets);
  static InformationPartition Singletons(int num_states);

  int num_states() const { return static_cast<int>(set_of_.size()); }
  int num_sets() const { return static_cast<int>(sets_.size()); }
  InfosetId SetOf(StateId s) const { return set_of_.at(s); }
  const std::vector<StateId>& Members(InfosetId id) const {
    return sets_.at(id);
  }
  const std::vector<std::vector<StateId>>& sets() const { return sets_; }

  bool operator==(const InformationPartition& other) const = default;

 private:
  std::vector<InfosetId> set_of_;
  std::vector<std::vector<StateId>> sets_;
};

// A finite extensive-form game. Construction does not validate; run
// ValidateGame before relying on the tree invariants.
class ExtensiveFormGame {
 public:
  ExtensiveFormGame() = default;
  // `partitions[p - 1]` belongs to player p. An empty vector means every
  // player has singleton information sets.
  ExtensiveFormGame(int num_players, std::vector<EfgNode> nodes,
                    std::vector<InformationPartition> partitions = {});

  int num_players() const { return num_players_; }
  int num_states() const { return static_cast<int>(nodes_.size()); }
  const EfgNode& node(StateId s) const { return nodes_.at(s); }
  const std::vector<EfgNode>& nodes() const { return nodes_; }
  const std::vector<InformationPartition>& partitions() const {
    return partitions_;
  }
  const InformationPartition& partition(PlayerId p) const {
    return partitions_.at(p - 1);
  }
  // I(p, s): the states player p cannot tell apart from s.
  const std::vector<StateId>& InformationSet(PlayerId p, StateId s) const {
    const InformationPartition& part = partition(p);
    return part.Members(part.SetOf(s));
  }

  bool operator==(const ExtensiveFormGame& other) const = default;

 private:
  int num_players_ = 0;
  std::vector<EfgNode> nodes_;
  std::vector<InformationPartition> partitions_;
};

struct Violation {
  std::string message;
  std::optional<StateId> state;
  std::optional<PlayerId> player;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Suspicious but permitted shapes, e.g. an information set mixing movers.
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

ValidationReport ValidateGame(const ExtensiveFormGame& game);

// Throws InvalidGameError carrying the first violations if `game` is invalid.
void RequireValid(const ExtensiveFormGame& game);

// Combines several possible initial games into one rooted at a fresh chance
// node. A single fragment with probability 1 is returned unchanged. Fragment
// f's state s becomes 1 + (sizes of fragments before f) + s.
ExtensiveFormGame NormalizeInitialStates(
    const std::vector<std::pair<ExtensiveFormGame, Rational>>& fragments);

// If the root is a decision node of player p != 1, swaps the labels of
// players p and 1 in movers, payoff columns and partitions.
ExtensiveFormGame RelabelFirstMover(const ExtensiveFormGame& game);

// Breadth-first from the root, children in declared order.
std::vector<StateId> EnumerateStates(const ExtensiveFormGame& game);

struct Trajectory {
  std::vector<StateId> states;
  Rational probability{1};
  // Mover of every non-final state on the path.
  std::vector<PlayerId> movers;
};

// One trajectory per leaf, in depth-first declared-children order.
std::vector<Trajectory> EnumerateTrajectories(const ExtensiveFormGame& game);

// Parent of every state (-1 for the root). Requires a valid tree.
std::vector<StateId> ParentTable(const ExtensiveFormGame& game);
// Number of transitions from the root. Requires a valid tree.
std::vector<int> DepthTable(const ExtensiveFormGame& game);

}  // namespace efg2ludii

#endif  // EFG2LUDII_EFG_H_
