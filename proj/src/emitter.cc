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

#include "efg2ludii/emitter.h"

#include "efg2ludii/errors.h"

namespace efg2ludii {
namespace {

Ludeme NeutralMarkerAt(StateId i) {
  return Ludeme::Term(
      "=", {Ludeme::Term("where", {Ludeme::Str("Marker"), Ludeme::Sym("Neutral")}),
            Ludeme::Int(i)});
}

Ludeme Sites(const std::string& region) {
  return Ludeme::Term("sites", {Ludeme::Str(region)});
}

Ludeme PlayerTerm(PlayerId p) { return Ludeme::Term("player", {Ludeme::Int(p)}); }

// The masks from the start rules: the neutral copy is hidden from everyone,
// and each player's copy from every other player.
std::vector<Ludeme> HidingBlock(int k) {
  std::vector<Ludeme> out;
  out.push_back(Ludeme::Term("set", {Ludeme::Sym("Hidden"), Sites(SubgraphRegion(0)),
                                     Ludeme::Sym("All").Named("to")}));
  for (PlayerId p = 1; p <= k; ++p) {
    for (PlayerId q = 1; q <= k; ++q) {
      if (q == p) continue;
      out.push_back(Ludeme::Term("set", {Ludeme::Sym("Hidden"), Sites(SubgraphRegion(p)),
                                         PlayerTerm(q).Named("to")}));
    }
  }
  return out;
}

Ludeme PayoffLiteral(const Decimal& d) {
  return d.fraction_digits().empty() ? Ludeme::Integer(d.ToString())
                                     : Ludeme::Dec(d.ToString());
}

Ludeme IntArray(const std::vector<int>& values) {
  std::vector<Ludeme> items;
  items.reserve(values.size());
  for (int v : values) items.push_back(Ludeme::Int(v));
  return Ludeme::Array(std::move(items));
}

void RequireCompilable(const ExtensiveFormGame& game) {
  RequireValid(game);
  const EfgNode& root = game.node(0);
  if (root.IsDecision() && root.mover != 1) {
    throw InvalidGameError("root is moved by player " + std::to_string(root.mover) +
                           "; relabel so that player 1 moves first");
  }
}

}  // namespace

int VertexIndex(PlayerId p, StateId i, int num_states) {
  if (num_states < 1 || p < 0 || p > kMaxPlayers || i < 0 || i >= num_states) {
    throw ArgumentError("vertex index arguments out of range (p=" + std::to_string(p) +
                        ", i=" + std::to_string(i) +
                        ", |S|=" + std::to_string(num_states) + ")");
  }
  return p * num_states + i;
}

std::vector<BigInt> ProbabilitiesToWeights(std::span<const Rational> probs) {
  if (probs.empty()) throw ArgumentError("no probabilities to convert");
  BigInt lcm = 1;
  for (const Rational& p : probs) {
    if (!p.IsPositive()) {
      throw ArgumentError("probability " + p.ToString() + " is not positive");
    }
    lcm = boost::multiprecision::lcm(lcm, p.denominator());
  }
  std::vector<BigInt> weights;
  BigInt g = 0;
  for (const Rational& p : probs) {
    weights.push_back(p.numerator() * (lcm / p.denominator()));
    g = boost::multiprecision::gcd(g, weights.back());
  }
  for (BigInt& w : weights) w /= g;
  return weights;
}

std::string SubgraphRegion(PlayerId p) { return "Subgraph_" + std::to_string(p); }

std::string InformationSetRegion(StateId i, PlayerId p) {
  return "InformationSet_" + std::to_string(i) + "_" + std::to_string(p);
}

Ludeme EmitEquipment(const ExtensiveFormGame& game) {
  const int k = game.num_players();
  const int n = game.num_states();
  std::vector<Ludeme> items;
  items.push_back(Ludeme::Term("piece", {Ludeme::Str("Marker"), Ludeme::Sym("Neutral")}));
  items.push_back(Ludeme::Term("piece", {Ludeme::Str("Marker"), Ludeme::Sym("Each")}));

  std::vector<Ludeme> vertices;
  std::vector<Ludeme> edges;
  for (PlayerId p = 0; p <= k; ++p) {
    for (StateId i = 0; i < n; ++i) {
      vertices.push_back(Ludeme::Array({Ludeme::Int(i), Ludeme::Int(p)}));
    }
    for (const EfgNode& node : game.nodes()) {
      for (StateId c : node.children) {
        edges.push_back(IntArray({VertexIndex(p, node.id, n), VertexIndex(p, c, n)}));
      }
    }
  }
  items.push_back(Ludeme::Term(
      "board", {Ludeme::Term("graph", {Ludeme::Array(std::move(vertices)).Named("vertices"),
                                       Ludeme::Array(std::move(edges)).Named("edges")})}));

  for (PlayerId p = 0; p <= k; ++p) {
    std::vector<int> members;
    for (StateId i = 0; i < n; ++i) members.push_back(VertexIndex(p, i, n));
    items.push_back(Ludeme::Term("regions", {Ludeme::Str(SubgraphRegion(p)), IntArray(members)}));
  }
  for (StateId i = 0; i < n; ++i) {
    for (PlayerId p = 1; p <= k; ++p) {
      std::vector<int> members;
      for (StateId j : game.InformationSet(p, i)) members.push_back(VertexIndex(p, j, n));
      items.push_back(Ludeme::Term(
          "regions", {Ludeme::Str(InformationSetRegion(i, p)), IntArray(members)}));
    }
  }
  return Ludeme::Term("equipment", {Ludeme::Array(std::move(items))});
}

Ludeme EmitStartRules(const ExtensiveFormGame& game) {
  const int k = game.num_players();
  std::vector<Ludeme> items;
  for (PlayerId p = 0; p <= k; ++p) {
    items.push_back(Ludeme::Term(
        "place", {Ludeme::Str("Marker" + std::to_string(p)),
                  Ludeme::Int(VertexIndex(p, 0, game.num_states()))}));
  }
  for (Ludeme& hide : HidingBlock(k)) items.push_back(std::move(hide));
  return Ludeme::Term("start", {Ludeme::Array(std::move(items))});
}

Ludeme EmitMoveRule(const ExtensiveFormGame& game, StateId i, int branch, StateId j) {
  if (i < 0 || i >= game.num_states()) {
    throw ArgumentError("state " + std::to_string(i) + " does not exist");
  }
  const EfgNode& from = game.node(i);
  if (branch < 0 || branch >= static_cast<int>(from.children.size()) ||
      from.children[branch] != j) {
    throw ArgumentError("no edge " + std::to_string(i) + " -> " + std::to_string(j) +
                        " at branch " + std::to_string(branch));
  }
  const int k = game.num_players();
  const int n = game.num_states();
  std::vector<Ludeme> effects;
  effects.push_back(Ludeme::Term(
      "fromTo", {Ludeme::Term("from", {Ludeme::Int(VertexIndex(0, i, n))}),
                 Ludeme::Term("to", {Ludeme::Int(VertexIndex(0, j, n))})}));
  for (PlayerId p = 1; p <= k; ++p) {
    effects.push_back(Ludeme::Term(
        "remove", {Ludeme::Term("sites", {Ludeme::Sym("Occupied"),
                                          Ludeme::Sym("P" + std::to_string(p)).Named("by")})}));
  }
  for (PlayerId p = 1; p <= k; ++p) {
    effects.push_back(Ludeme::Term(
        "add", {Ludeme::Term("piece", {Ludeme::Int(p)}),
                Ludeme::Term("to", {Sites(InformationSetRegion(j, p))})}));
  }
  for (Ludeme& hide : HidingBlock(k)) effects.push_back(std::move(hide));
  const EfgNode& to = game.node(j);
  PlayerId next = to.IsDecision() ? to.mover : 1;
  effects.push_back(Ludeme::Term("set", {Ludeme::Sym("NextPlayer"), PlayerTerm(next)}));
  return Ludeme::Term(
      "move", {Ludeme::Sym("Select"), Ludeme::Term("from", {Ludeme::Int(branch)}),
               Ludeme::Term("then", {Ludeme::Term("and", {Ludeme::Array(std::move(effects))})})});
}

Ludeme EmitPlayRules(const ExtensiveFormGame& game) {
  Ludeme chain = Ludeme::Term("or", {Ludeme::Array()});
  for (StateId i = game.num_states() - 1; i >= 0; --i) {
    const EfgNode& node = game.node(i);
    if (node.IsTerminal()) continue;
    std::vector<Ludeme> moves;
    for (std::size_t b = 0; b < node.children.size(); ++b) {
      moves.push_back(EmitMoveRule(game, i, static_cast<int>(b), node.children[b]));
    }
    Ludeme body;
    if (node.IsChance()) {
      std::vector<Ludeme> weights;
      for (const BigInt& w : ProbabilitiesToWeights(node.chance_probs)) {
        weights.push_back(Ludeme::Integer(w.str()));
      }
      body = Ludeme::Term("random", {Ludeme::Array(std::move(weights)),
                                     Ludeme::Array(std::move(moves))});
    } else {
      body = Ludeme::Term("or", {Ludeme::Array(std::move(moves))});
    }
    // Moved element by element: a braced list would deep-copy the chain.
    std::vector<Ludeme> args;
    args.reserve(3);
    args.push_back(NeutralMarkerAt(VertexIndex(0, i, game.num_states())));
    args.push_back(std::move(body));
    args.push_back(std::move(chain));
    chain = Ludeme::Term("if", std::move(args));
  }
  return Ludeme::Term("play", {std::move(chain)});
}

Ludeme EmitEndRules(const ExtensiveFormGame& game) {
  std::vector<Ludeme> clauses;
  for (const EfgNode& node : game.nodes()) {
    if (!node.IsTerminal()) continue;
    std::vector<Ludeme> payoffs;
    for (PlayerId p = 1; p <= game.num_players(); ++p) {
      payoffs.push_back(Ludeme::Term(
          "payoff", {Ludeme::Sym("P" + std::to_string(p)), PayoffLiteral(node.payoffs[p - 1])}));
    }
    clauses.push_back(Ludeme::Term(
        "if", {NeutralMarkerAt(VertexIndex(0, node.id, game.num_states())),
               Ludeme::Term("payoffs", {Ludeme::Array(std::move(payoffs))})}));
  }
  return Ludeme::Term("end", {Ludeme::Array(std::move(clauses))});
}

LudiiDescription Compile(const ExtensiveFormGame& game, std::string_view name) {
  RequireCompilable(game);
  Ludeme rules = Ludeme::Term(
      "rules", {EmitStartRules(game), EmitPlayRules(game), EmitEndRules(game)});
  return {Ludeme::Term("game", {Ludeme::Str(SanitizeGameName(name)),
                                Ludeme::Term("players", {Ludeme::Int(game.num_players())}),
                                EmitEquipment(game), std::move(rules)})};
}

std::string SanitizeGameName(std::string_view stem) {
  std::string out;
  for (char c : stem) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) {
      out.push_back(c);
    }
  }
  return out.empty() ? "Game" : out;
}

}  // namespace efg2ludii
