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

#include "efg2ludii/generator.h"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "efg2ludii/errors.h"
#include "efg2ludii/rng.h"

namespace efg2ludii {
namespace {

constexpr double kLeafRate = 0.25;
constexpr int kMaxChanceWeight = 6;

bool Bernoulli(SplitMix64& rng, double p) { return rng.NextDouble() < p; }

Decimal RandomPayoff(SplitMix64& rng) {
  const int tenths = static_cast<int>(rng.UniformBelow(201)) - 100;
  if (Bernoulli(rng, 0.5)) return Decimal::Parse(std::to_string(tenths / 10));
  std::string text = tenths < 0 ? "-" : "";
  const int magnitude = std::abs(tenths);
  text += std::to_string(magnitude / 10) + "." + std::to_string(magnitude % 10);
  return Decimal::Parse(text);
}

template <typename T>
void Shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.UniformBelow(i)]);
  }
}

}  // namespace

void ValidateParams(const GeneratorParams& params) {
  if (params.max_nodes < 1 || params.max_nodes > kMaxStates) {
    throw ArgumentError("max_nodes must be in [1, " + std::to_string(kMaxStates) + "]");
  }
  if (params.max_branching < 1) throw ArgumentError("max_branching must be at least 1");
  if (!(params.chance_rate >= 0.0 && params.chance_rate <= 1.0)) {
    throw ArgumentError("chance_rate must be in [0, 1]");
  }
  if (!(params.merge_rate >= 0.0 && params.merge_rate <= 1.0)) {
    throw ArgumentError("merge_rate must be in [0, 1]");
  }
  if (params.players < 0 || params.players > kMaxPlayers) {
    throw ArgumentError("players must be in [0, " + std::to_string(kMaxPlayers) + "]");
  }
  if (params.max_depth < 0) throw ArgumentError("max_depth must be non-negative");
}

ExtensiveFormGame GenerateGame(const GeneratorParams& params, std::uint64_t seed) {
  ValidateParams(params);
  SplitMix64 rng(seed);
  const int k = params.players > 0 ? params.players : 1 + static_cast<int>(rng.UniformBelow(4));

  struct Proto {
    NodeKind kind;
    PlayerId mover = kNature;
    int depth = 0;
    std::vector<StateId> children;
    std::vector<Rational> probs;
  };
  std::vector<Proto> protos;
  const bool root_inner = params.max_nodes > 1 && params.max_depth > 0;
  if (!root_inner) {
    protos.push_back({NodeKind::kTerminal});
  } else if (Bernoulli(rng, params.chance_rate)) {
    protos.push_back({NodeKind::kChance});
  } else {
    protos.push_back({NodeKind::kDecision, 1});
  }

  // Breadth-first, so a state's id is its position in creation order.
  for (std::size_t next = 0; next < protos.size(); ++next) {
    if (protos[next].kind == NodeKind::kTerminal) continue;
    const int budget = params.max_nodes - static_cast<int>(protos.size());
    int branching = 1 + static_cast<int>(rng.UniformBelow(params.max_branching));
    if (protos[next].kind == NodeKind::kChance || next == 0) {
      branching = std::max(branching, std::min(2, params.max_branching));
    }
    branching = std::min(branching, budget);
    if (branching == 0) {
      protos[next].kind = NodeKind::kTerminal;
      protos[next].mover = kNature;
      continue;
    }
    const int depth = protos[next].depth + 1;
    std::vector<BigInt> weights;
    BigInt total = 0;
    for (int b = 0; b < branching; ++b) {
      Proto child{NodeKind::kTerminal};
      child.depth = depth;
      if (depth < params.max_depth && !Bernoulli(rng, kLeafRate)) {
        if (Bernoulli(rng, params.chance_rate)) {
          child.kind = NodeKind::kChance;
        } else {
          child.kind = NodeKind::kDecision;
          child.mover = 1 + static_cast<PlayerId>(rng.UniformBelow(k));
        }
      }
      protos[next].children.push_back(static_cast<StateId>(protos.size()));
      protos.push_back(std::move(child));
      if (protos[next].kind == NodeKind::kChance) {
        weights.push_back(1 + rng.UniformBelow(kMaxChanceWeight));
        total += weights.back();
      }
    }
    for (const BigInt& w : weights) protos[next].probs.emplace_back(w, total);
  }

  std::vector<EfgNode> nodes;
  nodes.reserve(protos.size());
  for (std::size_t i = 0; i < protos.size(); ++i) {
    const Proto& p = protos[i];
    const StateId id = static_cast<StateId>(i);
    switch (p.kind) {
      case NodeKind::kDecision:
        nodes.push_back(MakeDecisionNode(id, p.mover, p.children));
        break;
      case NodeKind::kChance:
        nodes.push_back(MakeChanceNode(id, p.children, p.probs));
        break;
      case NodeKind::kTerminal: {
        std::vector<Decimal> payoffs;
        for (int q = 0; q < k; ++q) payoffs.push_back(RandomPayoff(rng));
        nodes.push_back(MakeTerminalNode(id, std::move(payoffs)));
        break;
      }
    }
  }

  // Candidate groups: inner non-root states with equal depth, mover and
  // branching factor.
  std::map<std::tuple<int, PlayerId, std::size_t>, std::vector<StateId>> groups;
  for (std::size_t i = 1; i < protos.size(); ++i) {
    const Proto& p = protos[i];
    if (p.kind == NodeKind::kTerminal) continue;
    groups[{p.depth, p.mover, p.children.size()}].push_back(static_cast<StateId>(i));
  }
  const int n = static_cast<int>(protos.size());
  std::vector<InformationPartition> partitions;
  for (PlayerId p = 1; p <= k; ++p) {
    std::vector<std::vector<StateId>> sets;
    for (const auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      std::vector<StateId> order = members;
      Shuffle(order, rng);
      std::vector<StateId> current = {order.front()};
      for (std::size_t m = 1; m < order.size(); ++m) {
        if (!Bernoulli(rng, params.merge_rate)) {
          if (current.size() > 1) sets.push_back(current);
          current.clear();
        }
        current.push_back(order[m]);
      }
      if (current.size() > 1) sets.push_back(current);
    }
    partitions.push_back(InformationPartition::FromSets(n, sets));
  }
  return ExtensiveFormGame(k, std::move(nodes), std::move(partitions));
}

}  // namespace efg2ludii
