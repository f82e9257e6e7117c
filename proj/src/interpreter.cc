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

#include "efg2ludii/interpreter.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "efg2ludii/errors.h"

namespace efg2ludii {
namespace {

const std::set<std::string, std::less<>>& Keywords() {
  static const std::set<std::string, std::less<>> kKeywords = {
      "game", "players", "equipment", "piece",  "board",  "graph", "regions",
      "rules", "start",  "place",     "set",    "play",   "if",    "=",
      "where", "or",     "random",    "move",   "from",   "to",    "then",
      "and",  "fromTo",  "remove",    "add",    "sites",  "end",   "payoffs",
      "payoff", "player"};
  return kKeywords;
}

const std::set<std::string, std::less<>>& KnownSymbols() {
  static const std::set<std::string, std::less<>> kSymbols = {
      "Neutral", "Each", "Hidden", "All", "Select", "NextPlayer", "Occupied"};
  return kSymbols;
}

std::string Describe(const Ludeme& l) {
  switch (l.kind) {
    case Ludeme::Kind::kTerm: return "ludeme '" + l.text + "'";
    case Ludeme::Kind::kArray: return "array";
    case Ludeme::Kind::kString: return "string \"" + l.text + "\"";
    case Ludeme::Kind::kInteger:
    case Ludeme::Kind::kDecimal: return "number " + l.text;
    case Ludeme::Kind::kSymbol: return "'" + l.text + "'";
  }
  return "?";
}

[[noreturn]] void Fail(const Ludeme& at, const std::string& message) {
  throw ParseError(at.pos, message);
}

bool IsPlayerSymbol(std::string_view s) {
  if (s.size() < 2 || s[0] != 'P') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Rejects anything outside the subset with the standard boundary message,
// otherwise reports that a known ludeme is in the wrong place.
[[noreturn]] void Unexpected(const Ludeme& l, const std::string& expected) {
  if (l.kind == Ludeme::Kind::kTerm && !Keywords().count(l.text)) {
    Fail(l, "unsupported ludeme: " + l.text);
  }
  if (l.kind == Ludeme::Kind::kSymbol && !KnownSymbols().count(l.text) &&
      !IsPlayerSymbol(l.text)) {
    Fail(l, "unsupported ludeme: " + l.text);
  }
  Fail(l, "unexpected " + Describe(l) + ", expected " + expected);
}

void ExpectTerm(const Ludeme& l, std::string_view head, std::size_t arity) {
  if (!l.IsTerm(head)) Unexpected(l, "(" + std::string(head) + " ...)");
  if (l.children.size() != arity) {
    Fail(l, "arity mismatch: '" + std::string(head) + "' expects " + std::to_string(arity) +
                " argument" + (arity == 1 ? "" : "s") + ", got " +
                std::to_string(l.children.size()));
  }
  for (const Ludeme& c : l.children) {
    if (!c.name.empty()) Fail(c, "unexpected named argument '" + c.name + ":' in '" + l.text + "'");
  }
}

void ExpectSymbol(const Ludeme& l, std::string_view symbol) {
  if (l.kind != Ludeme::Kind::kSymbol || l.text != symbol) {
    Unexpected(l, "'" + std::string(symbol) + "'");
  }
}

std::int64_t IntValue(const Ludeme& l, std::int64_t lo, std::int64_t hi, const char* what) {
  if (l.kind != Ludeme::Kind::kInteger) Unexpected(l, std::string("an integer ") + what);
  std::int64_t v = 0;
  const char* first = l.text.data();
  const char* last = first + l.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v < lo || v > hi) {
    Fail(l, std::string("malformed literal: ") + what + " " + l.text + " outside [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

const std::string& StringValue(const Ludeme& l, const char* what) {
  if (l.kind != Ludeme::Kind::kString) Unexpected(l, std::string("a string ") + what);
  return l.text;
}

const std::vector<Ludeme>& ArrayItems(const Ludeme& l, const char* what) {
  if (l.kind != Ludeme::Kind::kArray) Unexpected(l, std::string("an array of ") + what);
  return l.children;
}

// Either `{a b ...}` or a single item.
std::vector<const Ludeme*> ItemsOrSingle(const Ludeme& l) {
  std::vector<const Ludeme*> out;
  if (l.kind == Ludeme::Kind::kArray) {
    for (const Ludeme& c : l.children) out.push_back(&c);
  } else {
    out.push_back(&l);
  }
  return out;
}

constexpr std::int64_t kMaxVertex = static_cast<std::int64_t>(kMaxPlayers + 1) * kMaxStates;

}  // namespace

// Turns a checked ludeme tree into the tables of a LudiiAst. Rules are read
// before the equipment; region and piece references are resolved at the end.
class LudiiCompiler {
 public:
  LudiiAst Run(const Ludeme& root) {
    ast_.term_ = root;
    if (!root.IsTerm("game")) Unexpected(root, "(game ...)");
    const auto& args = root.children;
    if (args.size() != 4) {
      Fail(root, "arity mismatch: 'game' expects a name, players, equipment and rules, got " +
                     std::to_string(args.size()) + " arguments");
    }
    ast_.name_ = StringValue(args[0], "game name");
    const Ludeme& players = args[1];
    const Ludeme& equipment = args[2];
    const Ludeme& rules = args[3];
    ExpectTerm(players, "players", 1);
    ast_.num_players_ = static_cast<int>(IntValue(players.children[0], 1, kMaxPlayers, "player count"));
    if (!equipment.IsTerm("equipment")) Unexpected(equipment, "(equipment {...})");
    if (!rules.IsTerm("rules")) Unexpected(rules, "(rules ...)");
    Rules(rules);
    ExpectTerm(equipment, "equipment", 1);
    Equipment(equipment);
    Resolve();
    return std::move(ast_);
  }

 private:
  struct Reference {
    const Ludeme* at;
    int vertex;
  };

  int k() const { return ast_.num_players_; }

  PlayerId PlayerArg(const Ludeme& l) {
    ExpectTerm(l, "player", 1);
    return static_cast<PlayerId>(IntValue(l.children[0], 1, k(), "player"));
  }

  PlayerId PlayerSymbol(const Ludeme& l) {
    if (l.kind != Ludeme::Kind::kSymbol || !IsPlayerSymbol(l.text)) Unexpected(l, "a player P1..Pk");
    int p = 0;
    auto [ptr, ec] = std::from_chars(l.text.data() + 1, l.text.data() + l.text.size(), p);
    if (ec != std::errc() || p < 1 || p > k()) Fail(l, "no player " + l.text + " in a " + std::to_string(k()) + "-player game");
    return p;
  }

  int Vertex(const Ludeme& l) {
    int v = static_cast<int>(IntValue(l, 0, kMaxVertex, "vertex"));
    vertex_refs_.push_back({&l, v});
    return v;
  }

  int RegionRef(const Ludeme& sites) {
    ExpectTerm(sites, "sites", 1);
    const std::string& name = StringValue(sites.children[0], "region name");
    auto [it, fresh] = ast_.region_index_.emplace(name, static_cast<int>(ast_.regions_.size()));
    if (fresh) {
      ast_.regions_.push_back({name, {}});
      region_declared_.push_back(false);
      region_first_ref_.push_back(&sites);
    }
    return it->second;
  }

  void NeedPiece(const Ludeme& at, PlayerId owner) {
    piece_refs_.push_back({&at, owner});
  }

  // (set Hidden (sites "R") to:All | to:(player p))
  Effect SetHidden(const Ludeme& l) {
    if (l.children.size() != 3) {
      Fail(l, "arity mismatch: 'set Hidden' expects a region and to:, got " +
                  std::to_string(l.children.size()) + " arguments");
    }
    Effect e;
    e.kind = EffectKind::kSetHidden;
    e.region = RegionRef(l.children[1]);
    const Ludeme& to = l.children[2];
    if (to.name != "to") Fail(to, "expected named argument to:");
    if (to.kind == Ludeme::Kind::kSymbol && to.text == "All") {
      for (PlayerId p = 1; p <= k(); ++p) e.observers.push_back(p);
    } else {
      Ludeme plain = to;
      plain.name.clear();
      e.observers.push_back(PlayerArg(plain));
    }
    return e;
  }

  Effect SetEffect(const Ludeme& l) {
    if (l.children.empty()) Fail(l, "arity mismatch: 'set' needs arguments");
    const Ludeme& what = l.children[0];
    if (what.kind == Ludeme::Kind::kSymbol && what.text == "Hidden") return SetHidden(l);
    if (what.kind == Ludeme::Kind::kSymbol && what.text == "NextPlayer") {
      ExpectTerm(l, "set", 2);
      Effect e;
      e.kind = EffectKind::kSetNextPlayer;
      e.player = PlayerArg(l.children[1]);
      return e;
    }
    Unexpected(what, "Hidden or NextPlayer");
  }

  Effect EffectOf(const Ludeme& l) {
    Effect e;
    if (l.IsTerm("fromTo")) {
      ExpectTerm(l, "fromTo", 2);
      ExpectTerm(l.children[0], "from", 1);
      ExpectTerm(l.children[1], "to", 1);
      e.kind = EffectKind::kFromTo;
      e.from = Vertex(l.children[0].children[0]);
      e.to = Vertex(l.children[1].children[0]);
      return e;
    }
    if (l.IsTerm("remove")) {
      ExpectTerm(l, "remove", 1);
      const Ludeme& sites = l.children[0];
      if (!sites.IsTerm("sites") || sites.children.size() != 2) Unexpected(sites, "(sites Occupied by:Pp)");
      ExpectSymbol(sites.children[0], "Occupied");
      const Ludeme& by = sites.children[1];
      if (by.name != "by") Fail(by, "expected named argument by:");
      e.kind = EffectKind::kRemoveAllOf;
      e.player = PlayerSymbol(by);
      return e;
    }
    if (l.IsTerm("add")) {
      ExpectTerm(l, "add", 2);
      ExpectTerm(l.children[0], "piece", 1);
      ExpectTerm(l.children[1], "to", 1);
      e.kind = EffectKind::kAddToRegion;
      e.player = static_cast<PlayerId>(IntValue(l.children[0].children[0], 1, k(), "piece"));
      NeedPiece(l.children[0], e.player);
      e.region = RegionRef(l.children[1].children[0]);
      return e;
    }
    if (l.IsTerm("set")) return SetEffect(l);
    Unexpected(l, "an effect (fromTo, remove, add, set)");
  }

  MoveChoice Move(const Ludeme& l) {
    if (!l.IsTerm("move")) Unexpected(l, "(move Select ...)");
    if (l.children.empty()) Fail(l, "arity mismatch: 'move' needs a type");
    ExpectSymbol(l.children[0], "Select");
    if (l.children.size() != 2 && l.children.size() != 3) {
      Fail(l, "arity mismatch: 'move Select' expects (from n) and optional (then ...), got " +
                  std::to_string(l.children.size() - 1) + " arguments");
    }
    MoveChoice m;
    ExpectTerm(l.children[1], "from", 1);
    m.select_vertex = Vertex(l.children[1].children[0]);
    if (l.children.size() == 3) {
      ExpectTerm(l.children[2], "then", 1);
      const Ludeme& body = l.children[2].children[0];
      if (body.IsTerm("and")) {
        ExpectTerm(body, "and", 1);
        for (const Ludeme& item : ArrayItems(body.children[0], "effects")) {
          m.effects.push_back(EffectOf(item));
        }
      } else {
        m.effects.push_back(EffectOf(body));
      }
    }
    return m;
  }

  void Disjunction(const Ludeme& l, std::vector<MoveChoice>& out) {
    if (l.IsTerm("or")) {
      ExpectTerm(l, "or", 1);
      for (const Ludeme& item : ArrayItems(l.children[0], "moves")) Disjunction(item, out);
      return;
    }
    if (l.IsTerm("move")) {
      out.push_back(Move(l));
      return;
    }
    Unexpected(l, "(move ...) or (or {...})");
  }

  MoveGenerator Generator(const Ludeme& l) {
    MoveGenerator g;
    if (l.IsTerm("random")) {
      ExpectTerm(l, "random", 2);
      g.is_random = true;
      for (const Ludeme& w : ArrayItems(l.children[0], "weights")) {
        if (w.kind != Ludeme::Kind::kInteger || w.text[0] == '-' || w.text == "0" ||
            !w.name.empty()) {
          Fail(w, "malformed literal: random weight must be a positive integer, got " + Describe(w));
        }
        g.weights.push_back(ParseBigInt(w.text));
        if (g.weights.back() <= 0) Fail(w, "malformed literal: random weight must be positive");
      }
      for (const Ludeme& item : ArrayItems(l.children[1], "move generators")) {
        g.branches.emplace_back();
        Disjunction(item, g.branches.back());
      }
      if (g.weights.empty()) Fail(l, "random needs at least one branch");
      if (g.weights.size() != g.branches.size()) {
        Fail(l, "arity mismatch: random has " + std::to_string(g.weights.size()) + " weights for " +
                    std::to_string(g.branches.size()) + " generators");
      }
      return g;
    }
    Disjunction(l, g.moves);
    return g;
  }

  int Condition(const Ludeme& l) {
    ExpectTerm(l, "=", 2);
    const Ludeme& where = l.children[0];
    ExpectTerm(where, "where", 2);
    if (StringValue(where.children[0], "piece name") != "Marker") {
      Fail(where.children[0], "where only tracks \"Marker\" pieces");
    }
    ExpectSymbol(where.children[1], "Neutral");
    return Vertex(l.children[1]);
  }

  void Play(const Ludeme& l) {
    ExpectTerm(l, "play", 1);
    const Ludeme* cur = &l.children[0];
    while (cur->IsTerm("if")) {
      if (cur->children.size() != 2 && cur->children.size() != 3) {
        Fail(*cur, "arity mismatch: 'if' expects 2 or 3 arguments, got " +
                       std::to_string(cur->children.size()));
      }
      int vertex = Condition(cur->children[0]);
      ast_.play_.push_back({vertex, Generator(cur->children[1])});
      if (cur->children.size() == 2) return;
      cur = &cur->children[2];
    }
    ast_.fallback_ = Generator(*cur);
  }

  void Start(const Ludeme& l) {
    ExpectTerm(l, "start", 1);
    for (const Ludeme* item : ItemsOrSingle(l.children[0])) {
      if (item->IsTerm("place")) {
        ExpectTerm(*item, "place", 2);
        const std::string& piece = StringValue(item->children[0], "piece name");
        int owner = -1;
        if (piece.rfind("Marker", 0) == 0 && piece.size() > 6) {
          auto [ptr, ec] = std::from_chars(piece.data() + 6, piece.data() + piece.size(), owner);
          if (ec != std::errc() || ptr != piece.data() + piece.size()) owner = -1;
        }
        if (owner < 0 || owner > k()) Fail(item->children[0], "undeclared piece \"" + piece + "\"");
        NeedPiece(item->children[0], owner);
        Effect e;
        e.kind = EffectKind::kPlace;
        e.player = owner;
        e.to = Vertex(item->children[1]);
        ast_.start_.push_back(e);
      } else if (item->IsTerm("set")) {
        if (item->children.empty() || item->children[0].kind != Ludeme::Kind::kSymbol ||
            item->children[0].text != "Hidden") {
          Unexpected(item->children.empty() ? *item : item->children[0], "Hidden");
        }
        ast_.start_.push_back(SetHidden(*item));
      } else {
        Unexpected(*item, "(place ...) or (set Hidden ...)");
      }
    }
  }

  void End(const Ludeme& l) {
    ExpectTerm(l, "end", 1);
    for (const Ludeme* item : ItemsOrSingle(l.children[0])) {
      ExpectTerm(*item, "if", 2);
      LudiiAst::EndClause clause;
      clause.vertex = Condition(item->children[0]);
      const Ludeme& payoffs = item->children[1];
      ExpectTerm(payoffs, "payoffs", 1);
      std::vector<std::optional<Decimal>> by_player(k());
      for (const Ludeme& entry : ArrayItems(payoffs.children[0], "payoffs")) {
        ExpectTerm(entry, "payoff", 2);
        PlayerId p = PlayerSymbol(entry.children[0]);
        const Ludeme& value = entry.children[1];
        if (value.kind != Ludeme::Kind::kInteger && value.kind != Ludeme::Kind::kDecimal) {
          Fail(value, "malformed literal: payoff must be a number, got " + Describe(value));
        }
        if (by_player[p - 1]) Fail(entry, "duplicate payoff for P" + std::to_string(p));
        by_player[p - 1] = Decimal::Parse(value.text);
      }
      for (PlayerId p = 1; p <= k(); ++p) {
        if (!by_player[p - 1]) Fail(payoffs, "missing payoff for P" + std::to_string(p));
        clause.payoffs.push_back(*by_player[p - 1]);
      }
      ast_.end_.push_back(std::move(clause));
    }
  }

  void Rules(const Ludeme& rules) {
    bool seen_start = false, seen_play = false, seen_end = false;
    for (const Ludeme& section : rules.children) {
      if (section.IsTerm("start") && !seen_start && !seen_play && !seen_end) {
        Start(section);
        seen_start = true;
      } else if (section.IsTerm("play") && !seen_play && !seen_end) {
        Play(section);
        seen_play = true;
      } else if (section.IsTerm("end") && !seen_end) {
        End(section);
        seen_end = true;
      } else if (section.IsTerm("start") || section.IsTerm("play") || section.IsTerm("end")) {
        Fail(section, "'" + section.text + "' repeated or out of order; expected start, play, end");
      } else {
        Unexpected(section, "start, play or end");
      }
    }
    if (!seen_start || !seen_play || !seen_end) {
      Fail(rules, std::string("rules must contain start, play and end; missing ") +
                      (!seen_start ? "start" : !seen_play ? "play" : "end"));
    }
  }

  void Graph(const Ludeme& graph) {
    if (!graph.IsTerm("graph") || graph.children.size() != 2) Unexpected(graph, "(graph vertices:{...} edges:{...})");
    const Ludeme& vertices = graph.children[0];
    const Ludeme& edges = graph.children[1];
    if (vertices.name != "vertices") Fail(vertices, "expected named argument vertices:");
    if (edges.name != "edges") Fail(edges, "expected named argument edges:");
    for (const Ludeme& v : ArrayItems(vertices, "vertices")) {
      if (v.kind != Ludeme::Kind::kArray && v.kind != Ludeme::Kind::kInteger) {
        Unexpected(v, "a vertex {x y}");
      }
    }
    if (vertices.children.size() > static_cast<std::size_t>(kMaxVertex)) Fail(vertices, "board too large");
    ast_.num_vertices_ = static_cast<int>(vertices.children.size());
    for (const Ludeme& e : ArrayItems(edges, "edges")) {
      const auto& ends = ArrayItems(e, "edge endpoints");
      if (ends.size() != 2) Fail(e, "an edge needs exactly two endpoints");
      int a = static_cast<int>(IntValue(ends[0], 0, ast_.num_vertices_ - 1, "edge endpoint"));
      int b = static_cast<int>(IntValue(ends[1], 0, ast_.num_vertices_ - 1, "edge endpoint"));
      ast_.edges_.emplace_back(a, b);
    }
  }

  void Equipment(const Ludeme& equipment) {
    bool board = false;
    for (const Ludeme& item : ArrayItems(equipment.children[0], "equipment items")) {
      if (item.IsTerm("piece")) {
        ExpectTerm(item, "piece", 2);
        if (StringValue(item.children[0], "piece name") != "Marker") {
          Fail(item.children[0], "only \"Marker\" pieces are supported");
        }
        const Ludeme& role = item.children[1];
        if (role.kind == Ludeme::Kind::kSymbol && role.text == "Neutral") {
          neutral_piece_ = true;
        } else if (role.kind == Ludeme::Kind::kSymbol && role.text == "Each") {
          each_piece_ = true;
        } else {
          Unexpected(role, "Neutral or Each");
        }
      } else if (item.IsTerm("board")) {
        ExpectTerm(item, "board", 1);
        if (board) Fail(item, "more than one board");
        Graph(item.children[0]);
        board = true;
      } else if (item.IsTerm("regions")) {
        ExpectTerm(item, "regions", 2);
        if (!board) Fail(item, "regions must follow the board");
        const std::string& name = StringValue(item.children[0], "region name");
        auto [it, fresh] = ast_.region_index_.emplace(name, static_cast<int>(ast_.regions_.size()));
        if (fresh) {
          ast_.regions_.push_back({name, {}});
          region_declared_.push_back(false);
          region_first_ref_.push_back(nullptr);
        }
        if (region_declared_[it->second]) Fail(item, "region \"" + name + "\" declared twice");
        region_declared_[it->second] = true;
        std::vector<int>& members = ast_.regions_[it->second].vertices;
        for (const Ludeme& v : ArrayItems(item.children[1], "vertices")) {
          members.push_back(static_cast<int>(IntValue(v, 0, ast_.num_vertices_ - 1, "region vertex")));
        }
      } else {
        Unexpected(item, "piece, board or regions");
      }
    }
    if (!board) Fail(equipment, "equipment declares no board");
  }

  void Resolve() {
    for (std::size_t r = 0; r < ast_.regions_.size(); ++r) {
      if (!region_declared_[r]) {
        Fail(*region_first_ref_[r], "undeclared region \"" + ast_.regions_[r].name + "\"");
      }
    }
    for (const auto& [at, owner] : piece_refs_) {
      if ((owner == 0 && !neutral_piece_) || (owner > 0 && !each_piece_)) {
        Fail(*at, "undeclared piece \"Marker" + std::to_string(owner) + "\"");
      }
    }
    for (const auto& ref : vertex_refs_) {
      if (ref.vertex >= ast_.num_vertices_) {
        Fail(*ref.at, "vertex " + std::to_string(ref.vertex) + " outside the board of " +
                          std::to_string(ast_.num_vertices_) + " vertices");
      }
    }
    for (int i = static_cast<int>(ast_.play_.size()) - 1; i >= 0; --i) {
      ast_.play_index_[ast_.play_[i].vertex] = i;
    }
    for (int i = static_cast<int>(ast_.end_.size()) - 1; i >= 0; --i) {
      ast_.end_index_[ast_.end_[i].vertex] = i;
    }
  }

  LudiiAst ast_;
  std::vector<bool> region_declared_;
  std::vector<const Ludeme*> region_first_ref_;
  std::vector<std::pair<const Ludeme*, int>> piece_refs_;
  std::vector<Reference> vertex_refs_;
  bool neutral_piece_ = false;
  bool each_piece_ = false;
};

int LudiiAst::FindRegion(std::string_view name) const {
  auto it = region_index_.find(std::string(name));
  return it == region_index_.end() ? -1 : it->second;
}

const LudiiAst::PlayClause* LudiiAst::PlayClauseFor(int vertex) const {
  auto it = play_index_.find(vertex);
  return it == play_index_.end() ? nullptr : &play_[it->second];
}

const LudiiAst::EndClause* LudiiAst::EndClauseFor(int vertex) const {
  auto it = end_index_.find(vertex);
  return it == end_index_.end() ? nullptr : &end_[it->second];
}

LudiiAst CheckLgdl(const Ludeme& term) { return LudiiCompiler().Run(term); }

LudiiAst ParseLgdl(std::string_view text) { return CheckLgdl(ReadLudeme(text)); }

int InterpreterState::NeutralVertex() const {
  int found = -1;
  for (int v = 0; v < static_cast<int>(owner.size()); ++v) {
    if (owner[v] != 0) continue;
    if (found >= 0) return -1;
    found = v;
  }
  return found;
}

int InterpreterState::CountOwnedBy(int owner_id) const {
  return static_cast<int>(std::count(owner.begin(), owner.end(), owner_id));
}

namespace {

class Executor {
 public:
  Executor(const LudiiAst& ast, InterpreterState& state)
      : ast_(ast), state_(state), num_vertices_(ast.num_vertices()) {}

  void Apply(const Effect& e) {
    switch (e.kind) {
      case EffectKind::kPlace:
        Occupy(e.to, e.player);
        break;
      case EffectKind::kFromTo: {
        int piece = state_.owner[e.from];
        if (piece == kEmpty) throw EffectError("fromTo: vertex " + std::to_string(e.from) + " is empty");
        if (e.from == e.to) break;
        Vacate(e.from);
        Occupy(e.to, piece);
        break;
      }
      case EffectKind::kRemoveAllOf:
        for (int v = 0; v < num_vertices_; ++v) {
          if (state_.owner[v] == e.player) Vacate(v);
        }
        break;
      case EffectKind::kAddToRegion:
        for (int v : ast_.region(e.region).vertices) Occupy(v, e.player);
        break;
      case EffectKind::kSetHidden:
        for (int v : ast_.region(e.region).vertices) {
          for (PlayerId p : e.observers) state_.hidden[Index(p, v)] = 1;
        }
        break;
      case EffectKind::kSetNextPlayer:
        next_player_ = e.player;
        break;
    }
  }

  std::optional<PlayerId> next_player() const { return next_player_; }

 private:
  std::size_t Index(PlayerId p, int v) const {
    return static_cast<std::size_t>(p - 1) * num_vertices_ + v;
  }

  void Reveal(int v) {
    for (PlayerId p = 1; p <= ast_.num_players(); ++p) state_.hidden[Index(p, v)] = 0;
  }

  void Occupy(int v, int piece) {
    if (state_.owner[v] != kEmpty) {
      throw EffectError("vertex " + std::to_string(v) + " is already occupied");
    }
    state_.owner[v] = piece;
    Reveal(v);
  }

  void Vacate(int v) {
    state_.owner[v] = kEmpty;
    Reveal(v);
  }

  const LudiiAst& ast_;
  InterpreterState& state_;
  int num_vertices_;
  std::optional<PlayerId> next_player_;
};

}  // namespace

InterpreterState InitialState(const LudiiAst& ast) {
  InterpreterState state;
  state.owner.assign(ast.num_vertices(), kEmpty);
  state.hidden.assign(static_cast<std::size_t>(ast.num_players()) * ast.num_vertices(), 0);
  Executor exec(ast, state);
  for (const Effect& e : ast.start()) exec.Apply(e);
  state.mover = 1;
  state.terminal = IsTerminal(ast, state);
  return state;
}

MoveResolution LegalMoves(const LudiiAst& ast, const InterpreterState& state) {
  const LudiiAst::PlayClause* clause = ast.PlayClauseFor(state.NeutralVertex());
  const MoveGenerator& gen = clause ? clause->generator : ast.fallback();
  MoveResolution res;
  if (gen.is_random) {
    res.kind = MoveResolution::Kind::kChance;
    for (std::size_t b = 0; b < gen.weights.size(); ++b) {
      res.branches.push_back({gen.weights[b], gen.branches[b]});
    }
  } else {
    res.moves = gen.moves;
  }
  return res;
}

InterpreterState ApplyMove(const LudiiAst& ast, const InterpreterState& state,
                           const MoveChoice& move) {
  InterpreterState next = state;
  Executor exec(ast, next);
  for (const Effect& e : move.effects) exec.Apply(e);
  if (exec.next_player()) {
    next.mover = *exec.next_player();
  } else {
    next.mover = state.mover >= ast.num_players() ? 1 : state.mover + 1;
  }
  next.terminal = IsTerminal(ast, next);
  return next;
}

std::optional<std::vector<Decimal>> IsTerminal(const LudiiAst& ast,
                                               const InterpreterState& state) {
  const LudiiAst::EndClause* clause = ast.EndClauseFor(state.NeutralVertex());
  if (!clause) return std::nullopt;
  return clause->payoffs;
}

ObservationView Observe(const LudiiAst& ast, const InterpreterState& state,
                        PlayerId player) {
  if (player < 1 || player > ast.num_players()) {
    throw ArgumentError("observer " + std::to_string(player) + " is not a player");
  }
  ObservationView view;
  view.cells.resize(state.owner.size());
  for (std::size_t v = 0; v < state.owner.size(); ++v) {
    view.cells[v] = state.IsHidden(static_cast<int>(v), player) ? ObservationView::kHidden
                                                                : state.owner[v];
  }
  return view;
}

Policy UniformPolicy() {
  return [](const InterpreterState&, std::span<const MoveChoice> moves, SplitMix64& rng) {
    return static_cast<std::size_t>(rng.UniformBelow(static_cast<std::uint64_t>(moves.size())));
  };
}

PlayoutResult Playout(const LudiiAst& ast, std::uint64_t seed, const Policy& policy) {
  SplitMix64 rng(seed);
  PlayoutResult result;
  InterpreterState state = InitialState(ast);
  const std::size_t step_limit = 4 * static_cast<std::size_t>(ast.num_vertices()) + 64;
  while (!state.terminal) {
    if (result.steps.size() >= step_limit) {
      throw InvalidGameError("playout exceeded " + std::to_string(step_limit) + " moves");
    }
    MoveResolution res = LegalMoves(ast, state);
    const std::vector<MoveChoice>* moves = &res.moves;
    if (res.IsChance()) {
      BigInt total = 0;
      for (const ChanceBranch& b : res.branches) total += b.weight;
      BigInt r = rng.UniformBelow(total);
      for (const ChanceBranch& b : res.branches) {
        if (r < b.weight) {
          moves = &b.moves;
          break;
        }
        r -= b.weight;
      }
    }
    if (moves->empty()) {
      throw InvalidGameError("no legal moves in a non-terminal state (neutral marker at " +
                             std::to_string(state.NeutralVertex()) + ")");
    }
    std::size_t pick = 0;
    if (moves->size() > 1) {
      if (!policy) throw InvalidGameError("external choice required");
      pick = policy(state, *moves, rng);
      if (pick >= moves->size()) throw ArgumentError("policy picked a move out of range");
    }
    const MoveChoice& move = (*moves)[pick];
    PlayoutStep step;
    step.before = state.NeutralVertex();
    step.select = move.select_vertex;
    state = ApplyMove(ast, state, move);
    step.after = state.NeutralVertex();
    result.steps.push_back(step);
    result.moves.push_back(move);
  }
  result.payoffs = *state.terminal;
  result.leaf = state.NeutralVertex();
  return result;
}

}  // namespace efg2ludii
