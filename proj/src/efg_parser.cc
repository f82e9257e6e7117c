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

#include "efg2ludii/efg_parser.h"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "efg2ludii/errors.h"

namespace efg2ludii {
namespace {

enum class TokenKind { kOpen, kClose, kArrow, kAtom, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token Next() {
    SkipBlank();
    SourcePos start = pos_;
    if (pos_.offset >= text_.size()) return {TokenKind::kEnd, {}, start};
    char c = text_[pos_.offset];
    if (c == '(') {
      Advance();
      return {TokenKind::kOpen, text_.substr(start.offset, 1), start};
    }
    if (c == ')') {
      Advance();
      return {TokenKind::kClose, text_.substr(start.offset, 1), start};
    }
    while (pos_.offset < text_.size()) {
      char d = text_[pos_.offset];
      if (d == '(' || d == ')' || d == ';' || IsBlank(d)) break;
      if (static_cast<unsigned char>(d) < 0x20 || d == '"' || d == '{' ||
          d == '}') {
        throw ParseError(pos_, std::string("unexpected character '") + d + "'");
      }
      Advance();
    }
    std::string_view atom = text_.substr(start.offset, pos_.offset - start.offset);
    if (atom == "->") return {TokenKind::kArrow, atom, start};
    return {TokenKind::kAtom, atom, start};
  }

 private:
  static bool IsBlank(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void Advance() {
    if (text_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  void SkipBlank() {
    while (pos_.offset < text_.size()) {
      char c = text_[pos_.offset];
      if (IsBlank(c)) {
        Advance();
      } else if (c == ';') {
        while (pos_.offset < text_.size() && text_[pos_.offset] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  SourcePos pos_;
};

struct Declared {
  EfgNode node;
  SourcePos pos;
};

struct ChildRef {
  StateId id;
  SourcePos pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Shift(); }

  ExtensiveFormGame Parse() {
    ParseHeader();
    while (tok_.kind != TokenKind::kEnd) ParseDeclaration();
    return Build();
  }

 private:
  void Shift() { tok_ = lexer_.Next(); }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(tok_.pos, message);
  }

  std::string Describe(const Token& t) const {
    switch (t.kind) {
      case TokenKind::kOpen: return "'('";
      case TokenKind::kClose: return "')'";
      case TokenKind::kArrow: return "'->'";
      case TokenKind::kEnd: return "end of input";
      case TokenKind::kAtom: return "'" + std::string(t.text) + "'";
    }
    return "?";
  }

  void Expect(TokenKind kind, const char* what) {
    if (tok_.kind != kind) Fail(std::string("expected ") + what + ", found " + Describe(tok_));
    Shift();
  }

  void ExpectKeyword(std::string_view word) {
    if (tok_.kind != TokenKind::kAtom || tok_.text != word) {
      Fail("expected '" + std::string(word) + "', found " + Describe(tok_));
    }
    Shift();
  }

  long long Integer(const char* what, long long lo, long long hi) {
    if (tok_.kind != TokenKind::kAtom) Fail(std::string("expected ") + what + ", found " + Describe(tok_));
    long long value = 0;
    const char* first = tok_.text.data();
    const char* last = first + tok_.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) Fail(std::string(what) + " out of range");
    if (ec != std::errc() || ptr != last) {
      Fail(std::string("expected ") + what + ", found " + Describe(tok_));
    }
    if (value < lo || value > hi) {
      Fail(std::string(what) + " " + std::to_string(value) + " outside [" +
           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    Shift();
    return value;
  }

  StateId StateRef() {
    return static_cast<StateId>(Integer("state id", 0, kMaxStates - 1));
  }

  void ParseHeader() {
    if (tok_.kind == TokenKind::kEnd) Fail("empty document, expected '(efg 1 ...)' header");
    Expect(TokenKind::kOpen, "'('");
    ExpectKeyword("efg");
    if (tok_.kind != TokenKind::kAtom || tok_.text != "1") {
      Fail("unsupported format version " + Describe(tok_));
    }
    Shift();
    Expect(TokenKind::kOpen, "'('");
    ExpectKeyword("players");
    num_players_ = static_cast<int>(Integer("player count", 1, kMaxPlayers));
    Expect(TokenKind::kClose, "')'");
    Expect(TokenKind::kClose, "')'");
  }

  void ParseDeclaration() {
    SourcePos start = tok_.pos;
    Expect(TokenKind::kOpen, "'('");
    if (tok_.kind != TokenKind::kAtom) Fail("expected a declaration keyword, found " + Describe(tok_));
    std::string_view keyword = tok_.text;
    if (keyword == "decision") {
      Shift();
      ParseDecision(start);
    } else if (keyword == "chance") {
      Shift();
      ParseChance(start);
    } else if (keyword == "terminal") {
      Shift();
      ParseTerminal(start);
    } else if (keyword == "infoset") {
      Shift();
      ParseInfoset();
    } else {
      Fail("unknown keyword '" + std::string(keyword) + "'");
    }
    Expect(TokenKind::kClose, "')'");
  }

  StateId DeclareId() {
    SourcePos at = tok_.pos;
    StateId id = StateRef();
    if (nodes_.count(id)) {
      throw ParseError(at, "duplicate state id " + std::to_string(id));
    }
    return id;
  }

  std::vector<StateId> ChildList() {
    std::vector<StateId> out;
    while (tok_.kind == TokenKind::kAtom) {
      refs_.push_back({0, tok_.pos});
      out.push_back(StateRef());
      refs_.back().id = out.back();
    }
    return out;
  }

  void ParseDecision(const SourcePos& start) {
    StateId id = DeclareId();
    Expect(TokenKind::kOpen, "'('");
    ExpectKeyword("mover");
    PlayerId mover = static_cast<PlayerId>(Integer("mover", 1, num_players_));
    Expect(TokenKind::kClose, "')'");
    Expect(TokenKind::kOpen, "'('");
    ExpectKeyword("children");
    std::vector<StateId> children = ChildList();
    if (children.empty()) Fail("decision state " + std::to_string(id) + " needs at least one child");
    Expect(TokenKind::kClose, "')'");
    nodes_[id] = {MakeDecisionNode(id, mover, std::move(children)), start};
  }

  void ParseChance(const SourcePos& start) {
    StateId id = DeclareId();
    std::vector<StateId> children;
    std::vector<Rational> probs;
    while (tok_.kind == TokenKind::kOpen) {
      Shift();
      if (tok_.kind != TokenKind::kAtom) {
        Fail("malformed chance distribution at state " + std::to_string(id) +
             ": expected probability, found " + Describe(tok_));
      }
      try {
        probs.push_back(Rational::Parse(tok_.text));
      } catch (const ArgumentError&) {
        Fail("malformed chance distribution at state " + std::to_string(id) +
             ": bad probability " + Describe(tok_));
      }
      Shift();
      if (tok_.kind != TokenKind::kArrow) {
        Fail("malformed chance distribution at state " + std::to_string(id) +
             ": expected '->', found " + Describe(tok_));
      }
      Shift();
      refs_.push_back({0, tok_.pos});
      children.push_back(StateRef());
      refs_.back().id = children.back();
      Expect(TokenKind::kClose, "')'");
    }
    if (children.empty()) {
      Fail("malformed chance distribution at state " + std::to_string(id) +
           ": no branches");
    }
    nodes_[id] = {MakeChanceNode(id, std::move(children), std::move(probs)), start};
  }

  void ParseTerminal(const SourcePos& start) {
    StateId id = DeclareId();
    Expect(TokenKind::kOpen, "'('");
    ExpectKeyword("payoffs");
    std::vector<Decimal> payoffs;
    while (tok_.kind == TokenKind::kAtom) {
      if (!Decimal::IsLiteral(tok_.text)) Fail("malformed payoff literal " + Describe(tok_));
      payoffs.push_back(Decimal::Parse(tok_.text));
      Shift();
    }
    if (static_cast<int>(payoffs.size()) != num_players_) {
      Fail("terminal state " + std::to_string(id) + " has " +
           std::to_string(payoffs.size()) + " payoffs, expected " +
           std::to_string(num_players_));
    }
    Expect(TokenKind::kClose, "')'");
    nodes_[id] = {MakeTerminalNode(id, std::move(payoffs)), start};
  }

  void ParseInfoset() {
    PlayerId p = static_cast<PlayerId>(Integer("player", 1, num_players_));
    Expect(TokenKind::kOpen, "'('");
    std::vector<StateId> members;
    while (tok_.kind == TokenKind::kAtom) {
      SourcePos at = tok_.pos;
      StateId s = StateRef();
      auto [it, fresh] = infoset_member_pos_.emplace(std::make_pair(p, s), at);
      if (!fresh) {
        throw ParseError(at, "state " + std::to_string(s) +
                                 " is in two information sets of player " +
                                 std::to_string(p));
      }
      refs_.push_back({s, at});
      members.push_back(s);
    }
    if (members.empty()) Fail("empty information set");
    Expect(TokenKind::kClose, "')'");
    infosets_[p].push_back(std::move(members));
  }

  ExtensiveFormGame Build() {
    for (const ChildRef& ref : refs_) {
      if (!nodes_.count(ref.id)) {
        throw ParseError(ref.pos, "reference to undeclared state " + std::to_string(ref.id));
      }
    }
    if (!nodes_.count(0)) throw ParseError(tok_.pos, "no state with id 0");
    const int n = static_cast<int>(nodes_.size());
    std::vector<EfgNode> nodes;
    nodes.reserve(n);
    for (auto& [id, decl] : nodes_) {
      if (id != static_cast<StateId>(nodes.size())) {
        throw ParseError(decl.pos, "state ids must be contiguous from 0; state " +
                                       std::to_string(nodes.size()) +
                                       " is not declared");
      }
      nodes.push_back(decl.node);
    }
    std::vector<InformationPartition> partitions;
    for (PlayerId p = 1; p <= num_players_; ++p) {
      partitions.push_back(InformationPartition::FromSets(n, infosets_[p]));
    }
    ExtensiveFormGame game(num_players_, std::move(nodes), std::move(partitions));
    ValidationReport report = ValidateGame(game);
    if (!report.ok()) {
      const Violation& v = report.violations.front();
      SourcePos at = v.state ? nodes_.at(*v.state).pos : SourcePos{};
      throw ParseError(at, v.message);
    }
    return game;
  }

  Lexer lexer_;
  Token tok_{};
  int num_players_ = 0;
  std::map<StateId, Declared> nodes_;
  std::vector<ChildRef> refs_;
  std::map<PlayerId, std::vector<std::vector<StateId>>> infosets_;
  std::map<std::pair<PlayerId, StateId>, SourcePos> infoset_member_pos_;
};

}  // namespace

ExtensiveFormGame ParseEfg(std::string_view text) {
  return Parser(text).Parse();
}

std::string SerializeEfg(const ExtensiveFormGame& game) {
  std::ostringstream os;
  os << "(efg 1 (players " << game.num_players() << "))\n";
  for (const EfgNode& n : game.nodes()) {
    switch (n.kind) {
      case NodeKind::kDecision:
        os << "(decision " << n.id << " (mover " << n.mover << ") (children";
        for (StateId c : n.children) os << ' ' << c;
        os << "))\n";
        break;
      case NodeKind::kChance:
        os << "(chance " << n.id;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          os << " (" << n.chance_probs[i] << " -> " << n.children[i] << ')';
        }
        os << ")\n";
        break;
      case NodeKind::kTerminal:
        os << "(terminal " << n.id << " (payoffs";
        for (const Decimal& d : n.payoffs) os << ' ' << d;
        os << "))\n";
        break;
    }
  }
  for (PlayerId p = 1; p <= game.num_players(); ++p) {
    for (const auto& set : game.partition(p).sets()) {
      if (set.size() < 2) continue;
      os << "(infoset " << p << " (";
      for (std::size_t i = 0; i < set.size(); ++i) os << (i ? " " : "") << set[i];
      os << "))\n";
    }
  }
  return os.str();
}

}  // namespace efg2ludii
