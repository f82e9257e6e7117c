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

#ifndef EFG2LUDII_INTERPRETER_H_
#define EFG2LUDII_INTERPRETER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "efg2ludii/decimal.h"
#include "efg2ludii/efg.h"
#include "efg2ludii/ludeme.h"
#include "efg2ludii/rational.h"
#include "efg2ludii/rng.h"

namespace efg2ludii {

enum class EffectKind {
  kFromTo,         // (fromTo (from i) (to j))
  kRemoveAllOf,    // (remove (sites Occupied by:Pp))
  kAddToRegion,    // (add (piece p) (to (sites "R")))
  kSetHidden,      // (set Hidden (sites "R") to:...)
  kSetNextPlayer,  // (set NextPlayer (player m))
  kPlace,          // (place "Markerp" v), start rules only
};

struct Effect {
  EffectKind kind = EffectKind::kFromTo;
  int from = -1;
  int to = -1;
  PlayerId player = 0;
  int region = -1;
  std::vector<PlayerId> observers;

  bool operator==(const Effect& other) const = default;
};

struct MoveChoice {
  int select_vertex = 0;
  std::vector<Effect> effects;

  bool operator==(const MoveChoice& other) const = default;
};

struct ChanceBranch {
  BigInt weight;
  std::vector<MoveChoice> moves;
};

struct MoveResolution {
  enum class Kind { kDeterministic, kChance };
  Kind kind = Kind::kDeterministic;
  std::vector<MoveChoice> moves;       // kDeterministic
  std::vector<ChanceBranch> branches;  // kChance

  bool IsChance() const { return kind == Kind::kChance; }
};

struct Region {
  std::string name;
  std::vector<int> vertices;
};

// A move generator of the play rules: `(or {...})`, `(random {...} {...})`
// or a single `(move ...)`.
struct MoveGenerator {
  bool is_random = false;
  std::vector<MoveChoice> moves;
  std::vector<BigInt> weights;
  std::vector<std::vector<MoveChoice>> branches;
};

// A parsed and checked description of the construction subset.
class LudiiAst {
 public:
  struct PlayClause {
    int vertex;  // the clause applies while the neutral marker is here
    MoveGenerator generator;
  };
  struct EndClause {
    int vertex;
    std::vector<Decimal> payoffs;  // index p - 1
  };

  const Ludeme& term() const { return term_; }
  const std::string& name() const { return name_; }
  int num_players() const { return num_players_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Region>& regions() const { return regions_; }
  const Region& region(int index) const { return regions_.at(index); }
  // -1 if there is no such region.
  int FindRegion(std::string_view name) const;
  const std::vector<Effect>& start() const { return start_; }
  const std::vector<PlayClause>& play() const { return play_; }
  const MoveGenerator& fallback() const { return fallback_; }
  const std::vector<EndClause>& end() const { return end_; }

  // First play clause testing `vertex`, or nullptr.
  const PlayClause* PlayClauseFor(int vertex) const;
  const EndClause* EndClauseFor(int vertex) const;

 private:
  friend class LudiiCompiler;

  Ludeme term_;
  std::string name_;
  int num_players_ = 0;
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Region> regions_;
  std::unordered_map<std::string, int> region_index_;
  std::vector<Effect> start_;
  std::vector<PlayClause> play_;
  MoveGenerator fallback_;
  std::vector<EndClause> end_;
  std::unordered_map<int, int> play_index_;
  std::unordered_map<int, int> end_index_;
};

// Accepts exactly the ludemes the compiler emits (docs/lgdl-subset.ebnf).
// Errors are ParseErrors naming the position and the offending keyword,
// e.g. "unsupported ludeme: Add".
LudiiAst ParseLgdl(std::string_view text);
LudiiAst CheckLgdl(const Ludeme& term);

inline constexpr int kEmpty = -1;

struct InterpreterState {
  // Owner of the piece on each vertex: kEmpty, 0 (neutral) or a player.
  std::vector<int> owner;
  // hidden[(p - 1) * V + v] is set while vertex v is masked for player p.
  std::vector<std::uint8_t> hidden;
  PlayerId mover = 1;
  std::optional<std::vector<Decimal>> terminal;

  // The vertex of the single neutral marker; -1 if there is none or more
  // than one.
  int NeutralVertex() const;
  int CountOwnedBy(int owner_id) const;
  bool IsHidden(int vertex, PlayerId observer) const {
    return hidden[static_cast<std::size_t>(observer - 1) * owner.size() + vertex] != 0;
  }

  bool operator==(const InterpreterState& other) const = default;
};

// What one player sees of the board.
struct ObservationView {
  static constexpr int kHidden = -2;
  // Per vertex: kHidden, kEmpty or the owner of the visible piece.
  std::vector<int> cells;

  bool operator==(const ObservationView& other) const = default;
};

InterpreterState InitialState(const LudiiAst& ast);
MoveResolution LegalMoves(const LudiiAst& ast, const InterpreterState& state);
// Applies the effects in order. A vertex whose content changes becomes
// visible to every player until a `set Hidden` masks it again. The mover
// advances k -> 1 cyclically unless a `set NextPlayer` effect overrides it.
InterpreterState ApplyMove(const LudiiAst& ast, const InterpreterState& state,
                           const MoveChoice& move);
std::optional<std::vector<Decimal>> IsTerminal(const LudiiAst& ast,
                                               const InterpreterState& state);
ObservationView Observe(const LudiiAst& ast, const InterpreterState& state,
                        PlayerId player);

// Picks one of several deterministic moves.
using Policy = std::function<std::size_t(const InterpreterState&,
                                         std::span<const MoveChoice>,
                                         SplitMix64&)>;
Policy UniformPolicy();

struct PlayoutStep {
  int before = -1;  // neutral marker vertex before the move
  int select = 0;
  int after = -1;
};

struct PlayoutResult {
  std::vector<MoveChoice> moves;
  std::vector<PlayoutStep> steps;
  std::vector<Decimal> payoffs;
  int leaf = -1;
};

// Plays from the initial state to a terminal one. Chance branches are drawn
// with probability weight / total. A choice between several deterministic
// moves goes to `policy`; with an empty policy it is an error.
PlayoutResult Playout(const LudiiAst& ast, std::uint64_t seed,
                      const Policy& policy = UniformPolicy());

}  // namespace efg2ludii

#endif  // EFG2LUDII_INTERPRETER_H_
