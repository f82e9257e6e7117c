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

#include <string>
#include <vector>

#include "doctest.h"
#include "efg2ludii/emitter.h"
#include "efg2ludii/errors.h"
#include "efg2ludii/generator.h"
#include "efg2ludii/ludeme.h"
#include "support.h"

namespace efg2ludii {
namespace {

Decimal D(const char* s) { return Decimal::Parse(s); }

std::vector<BigInt> Weights(std::vector<Rational> probs) { return ProbabilitiesToWeights(probs); }

// Collects every term with the given head, pre-order.
void Collect(const Ludeme& node, std::string_view head, std::vector<const Ludeme*>& out) {
  if (node.IsTerm(head)) out.push_back(&node);
  for (const Ludeme& c : node.children) Collect(c, head, out);
}

int CountSetHidden(const Ludeme& node) {
  std::vector<const Ludeme*> sets;
  Collect(node, "set", sets);
  int n = 0;
  for (const Ludeme* s : sets) n += s->children.at(0).text == "Hidden";
  return n;
}

TEST_CASE("vertex indices") {
  CHECK(VertexIndex(2, 5, 100) == 205);
  CHECK(VertexIndex(3, 0, 12) == 36);
  CHECK(VertexIndex(0, 7, 8) == 7);
  CHECK_THROWS_AS(VertexIndex(1, 8, 8), ArgumentError);
  CHECK_THROWS_AS(VertexIndex(-1, 0, 8), ArgumentError);
  CHECK_THROWS_AS(VertexIndex(0, -1, 8), ArgumentError);
}

TEST_CASE("probabilities become smallest integer weights") {
  CHECK(Weights({Rational(1, 6), Rational(1, 3), Rational(1, 2)}) == std::vector<BigInt>{1, 2, 3});
  CHECK(Weights({Rational(1, 3), Rational(2, 3)}) == std::vector<BigInt>{1, 2});
  CHECK(Weights({Rational(1)}) == std::vector<BigInt>{1});
  CHECK(Weights({Rational(1, 4), Rational(1, 4), Rational(1, 2)}) == std::vector<BigInt>{1, 1, 2});
  CHECK(Weights({Rational(2, 7), Rational(5, 7)}) == std::vector<BigInt>{2, 5});
  CHECK(Weights({Rational(3, 10), Rational(7, 15), Rational(7, 30)}) == std::vector<BigInt>{9, 14, 7});
  CHECK_THROWS_AS(Weights({}), ArgumentError);
  CHECK_THROWS_AS(Weights({Rational(0), Rational(1)}), ArgumentError);
}

TEST_CASE("region names") {
  CHECK(SubgraphRegion(0) == "Subgraph_0");
  CHECK(InformationSetRegion(12, 3) == "InformationSet_12_3");
  CHECK(SanitizeGameName("my game-1") == "mygame1");
  CHECK(SanitizeGameName("---") == "Game");
  CHECK(SanitizeGameName("") == "Game");
}

TEST_CASE("start rules for two players and four states") {
  ExtensiveFormGame g(2, {MakeDecisionNode(0, 1, {1, 2}), MakeDecisionNode(1, 2, {3}),
                          MakeTerminalNode(2, {D("1"), D("0")}), MakeTerminalNode(3, {D("0"), D("1")})});
  const char* expected = R"((start {
      (place "Marker0" 0)
      (place "Marker1" 4)
      (place "Marker2" 8)
      (set Hidden (sites "Subgraph_0") to:All)
      (set Hidden (sites "Subgraph_1") to:(player 2))
      (set Hidden (sites "Subgraph_2") to:(player 1))
    }))";
  Ludeme start = EmitStartRules(g);
  CHECK(start == ReadLudeme(expected));
  CHECK(Tokenize(RenderLudeme(start)) == Tokenize(expected));
}

TEST_CASE("a single move rule") {
  ExtensiveFormGame g = testing::SmallImperfectGame();
  const char* expected = R"((move Select (from 0)
      (then (and {
        (fromTo (from 1) (to 3))
        (remove (sites Occupied by:P1))
        (remove (sites Occupied by:P2))
        (add (piece 1) (to (sites "InformationSet_3_1")))
        (add (piece 2) (to (sites "InformationSet_3_2")))
        (set Hidden (sites "Subgraph_0") to:All)
        (set Hidden (sites "Subgraph_1") to:(player 2))
        (set Hidden (sites "Subgraph_2") to:(player 1))
        (set NextPlayer (player 2))
      }))))";
  CHECK(EmitMoveRule(g, 1, 0, 3) == ReadLudeme(expected));
  // Into a terminal state the next player defaults to 1.
  Ludeme to_leaf = EmitMoveRule(g, 1, 1, 4);
  CHECK(RenderLudeme(to_leaf).find("(set NextPlayer (player 1))") != std::string::npos);
  CHECK_THROWS_AS(EmitMoveRule(g, 1, 0, 5), ArgumentError);
}

TEST_CASE("equipment regions follow the information sets") {
  ExtensiveFormGame g = testing::SmallImperfectGame();
  const std::string text = RenderLudeme(EmitEquipment(g));
  CHECK(text.find(R"((regions "InformationSet_1_1" {12 13}))") != std::string::npos);
  CHECK(text.find(R"((regions "InformationSet_2_1" {12 13}))") != std::string::npos);
  CHECK(text.find(R"((regions "InformationSet_3_2" {25 27}))") != std::string::npos);
  CHECK(text.find(R"((regions "Subgraph_2" {22 23 24 25 26 27 28 29 30 31 32}))") != std::string::npos);
}

TEST_CASE("chance states emit weighted random moves") {
  const std::string text = Compile(testing::ThirdsGame(), "Thirds").Render();
  CHECK(text.find("(random {1 2} {") != std::string::npos);
  CHECK(CountTerms(ReadLudeme(text), "move") == 2);
}

TEST_CASE("end rules match the published two-terminal example") {
  ExtensiveFormGame g = testing::TwoChainGame();
  Ludeme end = EmitEndRules(g);
  CHECK(end == ReadLudeme(testing::kTwoChainEndRules));
  CHECK(Tokenize(RenderLudeme(end)) == Tokenize(testing::kTwoChainEndRules));
  const std::string text = RenderLudeme(end);
  for (const char* literal : {"(payoff P1 -1)", "(payoff P2 0.5)", "(payoff P3 1)",
                              "(payoff P1 10)", "(payoff P2 12)", "(payoff P3 2020)"}) {
    CHECK(text.find(literal) != std::string::npos);
  }
}

TEST_CASE("payoff literals keep integer and decimal kinds") {
  ExtensiveFormGame g(1, {MakeChanceNode(0, {1, 2}, {Rational(1, 2), Rational(1, 2)}),
                          MakeTerminalNode(1, {D("3.0")}), MakeTerminalNode(2, {D("-0.25")})});
  Ludeme end = EmitEndRules(g);
  std::vector<const Ludeme*> payoffs;
  Collect(end, "payoff", payoffs);
  REQUIRE(payoffs.size() == 2);
  CHECK(payoffs[0]->children[1].kind == Ludeme::Kind::kInteger);
  CHECK(payoffs[0]->children[1].text == "3");
  CHECK(payoffs[1]->children[1].kind == Ludeme::Kind::kDecimal);
  CHECK(payoffs[1]->children[1].text == "-0.25");
}

TEST_CASE("a game without inner states has empty play rules") {
  ExtensiveFormGame g(2, {MakeTerminalNode(0, {D("1"), D("2")})});
  CHECK(RenderLudeme(EmitPlayRules(g)) == "(play (or {}))\n");
}

TEST_CASE("compile requires player 1 or nature at the root") {
  ExtensiveFormGame g(2, {MakeDecisionNode(0, 2, {1}), MakeTerminalNode(1, {D("0"), D("0")})});
  CHECK_THROWS_AS(Compile(g), InvalidGameError);
  ExtensiveFormGame broken(1, {MakeDecisionNode(0, 1, {1})});
  CHECK_THROWS_AS(Compile(broken), InvalidGameError);
}

TEST_CASE("construction counts") {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GeneratorParams params;
      params.players = k;
      params.max_nodes = 120;
      ExtensiveFormGame g = GenerateGame(params, seed);
      CAPTURE(k);
      CAPTURE(seed);
      Ludeme game = Compile(g).root;
      const long long n = g.num_states();

      Ludeme start = EmitStartRules(g);
      CHECK(CountTerms(start, "place") == k + 1);
      CHECK(CountSetHidden(start) == 1 + k * (k - 1));

      std::vector<const Ludeme*> moves;
      Collect(game, "move", moves);
      long long transitions = 0;
      for (const EfgNode& node : g.nodes()) transitions += node.children.size();
      CHECK(static_cast<long long>(moves.size()) == transitions);
      for (const Ludeme* move : moves) {
        const Ludeme& effects = move->children.at(2).children.at(0).children.at(0);
        CHECK(effects.children.size() == static_cast<std::size_t>(2 * k + k * (k - 1) + 3));
      }

      std::vector<const Ludeme*> graphs;
      Collect(game, "graph", graphs);
      REQUIRE(graphs.size() == 1);
      CHECK(static_cast<long long>(graphs[0]->children[0].children.size()) == (k + 1) * n);
      CHECK(static_cast<long long>(graphs[0]->children[1].children.size()) == (k + 1) * (n - 1));
      CHECK(CountTerms(game, "regions") == (k + 1) + k * n);
    }
  }
}

TEST_CASE("rendered descriptions read back to the same tree") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    LudiiDescription d = Compile(GenerateGame({}, seed));
    CHECK(ReadLudeme(d.Render()) == d.root);
  }
}

TEST_CASE("ludeme reader") {
  Ludeme t = ReadLudeme(R"(// comment
      (set Hidden (sites "Subgraph_1") to:(player 2)))");
  CHECK(t.IsTerm("set"));
  REQUIRE(t.children.size() == 3);
  CHECK(t.children[2].name == "to");
  CHECK(t.children[2].IsTerm("player"));
  CHECK(ReadLudeme("1.50").kind == Ludeme::Kind::kDecimal);
  CHECK(ReadLudeme("-3").kind == Ludeme::Kind::kInteger);
  CHECK_THROWS_AS(ReadLudeme(""), ParseError);
  CHECK_THROWS_AS(ReadLudeme("(a) (b)"), ParseError);
  CHECK_THROWS_AS(ReadLudeme("(a {b)"), ParseError);
  CHECK_THROWS_AS(ReadLudeme("\"open"), ParseError);
  CHECK(Tokenize("(a  {1\n 2})") == std::vector<std::string>{"(", "a", "{", "1", "2", "}", ")"});
}

}  // namespace
}  // namespace efg2ludii
