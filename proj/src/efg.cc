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

#include "efg2ludii/efg.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "efg2ludii/errors.h"

namespace efg2ludii {

EfgNode MakeDecisionNode(StateId id, PlayerId mover,
                         std::vector<StateId> children) {
  EfgNode n;
  n.id = id;
  n.kind = NodeKind::kDecision;
  n.mover = mover;
  n.children = std::move(children);
  return n;
}

EfgNode MakeChanceNode(StateId id, std::vector<StateId> children,
                       std::vector<Rational> probs) {
  EfgNode n;
  n.id = id;
  n.kind = NodeKind::kChance;
  n.mover = kNature;
  n.children = std::move(children);
  n.chance_probs = std::move(probs);
  return n;
}

EfgNode MakeTerminalNode(StateId id, std::vector<Decimal> payoffs) {
  EfgNode n;
  n.id = id;
  n.kind = NodeKind::kTerminal;
  n.payoffs = std::move(payoffs);
  return n;
}

InformationPartition InformationPartition::FromSets(
    int num_states, std::vector<std::vector<StateId>> sets) {
  InformationPartition part;
  part.set_of_.assign(num_states, -1);
  std::vector<std::vector<StateId>> all;
  std::vector<bool> seen(num_states, false);
  for (auto& set : sets) {
    if (set.empty()) continue;
    for (StateId s : set) {
      if (s < 0 || s >= num_states) {
        throw ArgumentError("information set member " + std::to_string(s) +
                            " out of range");
      }
      if (seen[s]) {
        throw ArgumentError("state " + std::to_string(s) +
                            " appears in two information sets");
      }
      seen[s] = true;
    }
    std::sort(set.begin(), set.end());
    all.push_back(std::move(set));
  }
  for (StateId s = 0; s < num_states; ++s) {
    if (!seen[s]) all.push_back({s});
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (InfosetId id = 0; id < static_cast<int>(all.size()); ++id) {
    for (StateId s : all[id]) part.set_of_[s] = id;
  }
  part.sets_ = std::move(all);
  return part;
}

InformationPartition InformationPartition::Singletons(int num_states) {
  return FromSets(num_states, {});
}

ExtensiveFormGame::ExtensiveFormGame(
    int num_players, std::vector<EfgNode> nodes,
    std::vector<InformationPartition> partitions)
    : num_players_(num_players),
      nodes_(std::move(nodes)),
      partitions_(std::move(partitions)) {
  if (partitions_.empty()) {
    for (int p = 0; p < num_players_; ++p) {
      partitions_.push_back(InformationPartition::Singletons(num_states()));
    }
  }
}

std::string ValidationReport::Summary() const {
  std::ostringstream os;
  for (const Violation& v : violations) os << v.message << "\n";
  return os.str();
}

ValidationReport ValidateGame(const ExtensiveFormGame& game) {
  ValidationReport report;
  auto violate = [&](std::string message, std::optional<StateId> state = {},
                     std::optional<PlayerId> player = {}) {
    report.violations.push_back({std::move(message), state, player});
  };
  const int k = game.num_players();
  const int n = game.num_states();
  if (k < 1 || k > kMaxPlayers) {
    violate("player count " + std::to_string(k) + " outside [1, " +
            std::to_string(kMaxPlayers) + "]");
  }
  if (n < 1) {
    violate("game has no states");
    return report;
  }
  if (n > kMaxStates) {
    violate("state count " + std::to_string(n) + " exceeds cap " +
            std::to_string(kMaxStates));
    return report;
  }

  std::vector<std::vector<StateId>> parents(n);
  for (StateId s = 0; s < n; ++s) {
    const EfgNode& node = game.node(s);
    const std::string where = "state " + std::to_string(s);
    if (node.id != s) {
      violate(where + " carries id " + std::to_string(node.id), s);
    }
    switch (node.kind) {
      case NodeKind::kTerminal:
        if (!node.children.empty()) violate(where + ": terminal with children", s);
        if (static_cast<int>(node.payoffs.size()) != k) {
          violate(where + ": payoff vector has " +
                      std::to_string(node.payoffs.size()) + " entries, expected " +
                      std::to_string(k),
                  s);
        }
        break;
      case NodeKind::kDecision:
        if (node.mover < 1 || node.mover > k) {
          violate(where + ": mover " + std::to_string(node.mover) +
                      " outside [1, " + std::to_string(k) + "]",
                  s);
        }
        if (node.children.empty()) violate(where + ": inner state without children", s);
        if (!node.chance_probs.empty()) {
          violate(where + ": decision state carries chance probabilities", s);
        }
        break;
      case NodeKind::kChance: {
        if (node.mover != kNature) violate(where + ": chance state with a regular mover", s);
        if (node.children.empty()) violate(where + ": inner state without children", s);
        if (node.chance_probs.size() != node.children.size()) {
          violate(where + ": " + std::to_string(node.chance_probs.size()) +
                      " probabilities for " +
                      std::to_string(node.children.size()) + " children",
                  s);
          break;
        }
        bool all_positive = true;
        for (const Rational& p : node.chance_probs) {
          if (!p.IsPositive()) {
            violate(where + ": probability " + p.ToString() +
                        " is not positive",
                    s);
            all_positive = false;
          }
        }
        Rational total = Sum(node.chance_probs);
        if (all_positive && total != Rational(1)) {
          violate("state " + std::to_string(s) + ": distribution sums to " +
                      total.ToString() + " ≠ 1",
                  s);
        }
        break;
      }
    }
    if (!node.IsTerminal() && !node.payoffs.empty()) {
      violate(where + ": inner state carries payoffs", s);
    }
    for (StateId c : node.children) {
      if (c < 0 || c >= n) {
        violate(where + ": child " + std::to_string(c) + " is not a state", s);
        continue;
      }
      parents[c].push_back(s);
    }
  }

  bool tree_ok = true;
  if (!parents[0].empty()) {
    violate("not a tree: root state 0 has a parent", 0);
    tree_ok = false;
  }
  for (StateId s = 1; s < n; ++s) {
    if (parents[s].size() > 1) {
      violate("not a tree: state " + std::to_string(s) + " is a child of " +
                  std::to_string(parents[s][0]) + " and " +
                  std::to_string(parents[s][1]),
              s);
      tree_ok = false;
    } else if (parents[s].empty()) {
      violate("not a tree: state " + std::to_string(s) + " has no parent", s);
      tree_ok = false;
    }
  }
  if (tree_ok) {
    // n - 1 edges with unique parents: connected iff everything is reachable.
    std::vector<bool> reached(n, false);
    std::vector<StateId> stack = {0};
    reached[0] = true;
    int count = 1;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (StateId c : game.node(s).children) {
        if (c < 0 || c >= n || reached[c]) continue;
        reached[c] = true;
        ++count;
        stack.push_back(c);
      }
    }
    if (count != n) {
      for (StateId s = 0; s < n; ++s) {
        if (!reached[s]) {
          violate("not a tree: state " + std::to_string(s) +
                      " is not reachable from the root",
                  s);
          break;
        }
      }
    }
  }

  if (static_cast<int>(game.partitions().size()) != k) {
    violate("expected " + std::to_string(k) + " information partitions, got " +
            std::to_string(game.partitions().size()));
    return report;
  }
  for (PlayerId p = 1; p <= k; ++p) {
    const InformationPartition& part = game.partition(p);
    if (part.num_states() != n) {
      violate("partition of player " + std::to_string(p) + " covers " +
                  std::to_string(part.num_states()) + " states, expected " +
                  std::to_string(n),
              std::nullopt, p);
      continue;
    }
    if (part.Members(part.SetOf(0)).size() != 1) {
      violate("player " + std::to_string(p) +
                  " cannot tell the initial state apart from other states",
              0, p);
    }
    for (const auto& set : part.sets()) {
      if (set.size() < 2) continue;
      const EfgNode& first = game.node(set.front());
      for (StateId s : set) {
        const EfgNode& other = game.node(s);
        if (other.kind != first.kind || other.mover != first.mover ||
            other.children.size() != first.children.size()) {
          report.warnings.push_back(
              "player " + std::to_string(p) + " information set containing " +
              std::to_string(set.front()) + " mixes movers or branching (state " +
              std::to_string(s) + ")");
          break;
        }
      }
    }
  }
  return report;
}

void RequireValid(const ExtensiveFormGame& game) {
  ValidationReport report = ValidateGame(game);
  if (!report.ok()) throw InvalidGameError(report.violations.front().message);
}

namespace {

ExtensiveFormGame Renumber(const ExtensiveFormGame& game, int offset) {
  std::vector<EfgNode> nodes = game.nodes();
  for (EfgNode& n : nodes) {
    n.id += offset;
    for (StateId& c : n.children) c += offset;
  }
  return ExtensiveFormGame(game.num_players(), std::move(nodes),
                           game.partitions());
}

}  // namespace

ExtensiveFormGame NormalizeInitialStates(
    const std::vector<std::pair<ExtensiveFormGame, Rational>>& fragments) {
  if (fragments.empty()) throw ArgumentError("no initial states given");
  Rational total;
  for (const auto& [fragment, prob] : fragments) {
    RequireValid(fragment);
    if (!prob.IsPositive()) {
      throw ArgumentError("initial state probability " + prob.ToString() +
                          " is not positive");
    }
    if (fragment.num_players() != fragments.front().first.num_players()) {
      throw ArgumentError("initial state fragments disagree on player count");
    }
    total += prob;
  }
  if (total != Rational(1)) {
    throw ArgumentError("initial state probabilities sum to " +
                        total.ToString() + ", not 1");
  }
  if (fragments.size() == 1) return fragments.front().first;

  const int k = fragments.front().first.num_players();
  std::vector<EfgNode> nodes;
  std::vector<StateId> roots;
  std::vector<Rational> probs;
  nodes.push_back(EfgNode{});
  std::vector<std::vector<std::vector<StateId>>> sets(k);
  int offset = 1;
  for (const auto& [fragment, prob] : fragments) {
    ExtensiveFormGame moved = Renumber(fragment, offset);
    roots.push_back(offset);
    probs.push_back(prob);
    for (const EfgNode& n : moved.nodes()) nodes.push_back(n);
    for (PlayerId p = 1; p <= k; ++p) {
      for (auto set : fragment.partition(p).sets()) {
        for (StateId& s : set) s += offset;
        sets[p - 1].push_back(std::move(set));
      }
    }
    offset += fragment.num_states();
  }
  nodes[0] = MakeChanceNode(0, std::move(roots), std::move(probs));
  std::vector<InformationPartition> partitions;
  for (PlayerId p = 1; p <= k; ++p) {
    partitions.push_back(
        InformationPartition::FromSets(offset, std::move(sets[p - 1])));
  }
  return ExtensiveFormGame(k, std::move(nodes), std::move(partitions));
}

ExtensiveFormGame RelabelFirstMover(const ExtensiveFormGame& game) {
  const EfgNode& root = game.node(0);
  if (!root.IsDecision() || root.mover == 1) return game;
  const PlayerId swap = root.mover;
  auto relabel = [swap](PlayerId p) {
    if (p == swap) return PlayerId{1};
    if (p == 1) return swap;
    return p;
  };
  std::vector<EfgNode> nodes = game.nodes();
  for (EfgNode& n : nodes) {
    if (n.IsDecision()) n.mover = relabel(n.mover);
    if (n.IsTerminal()) std::swap(n.payoffs.at(0), n.payoffs.at(swap - 1));
  }
  std::vector<InformationPartition> partitions = game.partitions();
  std::swap(partitions.at(0), partitions.at(swap - 1));
  return ExtensiveFormGame(game.num_players(), std::move(nodes),
                           std::move(partitions));
}

std::vector<StateId> EnumerateStates(const ExtensiveFormGame& game) {
  std::vector<StateId> order;
  order.reserve(game.num_states());
  std::deque<StateId> queue = {0};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (StateId c : game.node(s).children) queue.push_back(c);
  }
  return order;
}

std::vector<Trajectory> EnumerateTrajectories(const ExtensiveFormGame& game) {
  std::vector<Trajectory> out;
  Trajectory current;
  // Explicit stack of (state, next child index) keeps deep chains off the
  // call stack.
  struct Frame {
    StateId state;
    std::size_t next;
    Rational prob;
  };
  std::vector<Frame> stack = {{0, 0, Rational(1)}};
  current.states.push_back(0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const EfgNode& node = game.node(top.state);
    if (node.IsTerminal()) {
      out.push_back({current.states, top.prob, current.movers});
      stack.pop_back();
      current.states.pop_back();
      if (!current.movers.empty()) current.movers.pop_back();
      continue;
    }
    if (top.next == node.children.size()) {
      stack.pop_back();
      current.states.pop_back();
      if (!current.movers.empty()) current.movers.pop_back();
      continue;
    }
    std::size_t branch = top.next++;
    Rational prob = top.prob;
    if (node.IsChance()) prob *= node.chance_probs[branch];
    StateId child = node.children[branch];
    current.movers.push_back(node.mover);
    current.states.push_back(child);
    stack.push_back({child, 0, std::move(prob)});
  }
  return out;
}

std::vector<StateId> ParentTable(const ExtensiveFormGame& game) {
  std::vector<StateId> parent(game.num_states(), -1);
  for (const EfgNode& n : game.nodes()) {
    for (StateId c : n.children) parent.at(c) = n.id;
  }
  return parent;
}

std::vector<int> DepthTable(const ExtensiveFormGame& game) {
  std::vector<int> depth(game.num_states(), 0);
  for (StateId s : EnumerateStates(game)) {
    for (StateId c : game.node(s).children) depth[c] = depth[s] + 1;
  }
  return depth;
}

}  // namespace efg2ludii
