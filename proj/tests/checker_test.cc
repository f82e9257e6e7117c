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

#include <set>
#include <string>

#include "doctest.h"
#include "efg2ludii/checker.h"
#include "efg2ludii/emitter.h"
#include "efg2ludii/generator.h"
#include "support.h"

namespace efg2ludii {
namespace {

using Mutation = bool (*)(Ludeme&);

std::set<Criterion> FailedSet(const EquivalenceReport& r) {
  std::set<Criterion> out;
  for (Criterion c : r.FailedCriteria()) {
    if (c != Criterion::kTrajectoryBijection) out.insert(c);
  }
  return out;
}

EquivalenceReport VerifyTree(const ExtensiveFormGame& g, const Ludeme& game) {
  return VerifyDescription(g, RenderLudeme(game));
}

TEST_CASE("compiled descriptions pass every criterion") {
  for (const ExtensiveFormGame& g : {testing::SmallImperfectGame(), testing::ThirdsGame()}) {
    EquivalenceReport r = VerifyDescription(g, Compile(g).Render());
    CHECK(r.AllPassed());
    for (Criterion c : kAllCriteria) CHECK(r.Passed(c));
    CHECK(r.pairs_visited == g.num_states());
  }
}

TEST_CASE("criterion labels") {
  CHECK(CriterionId(Criterion::kMover) == "2b");
  CHECK(CriterionId(Criterion::kIndistinguishability) == "3");
  CHECK(CriterionName(Criterion::kSubsetValidity) == "subset-validity");
}

TEST_CASE("text outside the subset fails criterion 1 only") {
  EquivalenceReport r = VerifyDescription(testing::SmallImperfectGame(), testing::kTicTacToe);
  CHECK(r.Failed(Criterion::kSubsetValidity));
  CHECK(r.FailedCriteria().size() == 1);
  CHECK(r.at(Criterion::kMover).status == CriterionResult::Status::kSkipped);
  CHECK(r.ToRecords().find("unsupported ludeme: Add") != std::string::npos);
}

TEST_CASE("each mutation fails exactly its criterion") {
  const ExtensiveFormGame g = testing::SmallImperfectGame();
  const Ludeme clean = Compile(g).root;
  struct Case {
    const char* name;
    Criterion target;
    std::function<bool(Ludeme&)> mutate;
  };
  const Case cases[] = {
      {"next player", Criterion::kMover, [&](Ludeme& l) { return testing::MutateNextPlayer(l, g); }},
      {"delete move", Criterion::kBranching, testing::MutateDeleteMove},
      {"weight", Criterion::kChance, testing::MutateWeight},
      {"payoff", Criterion::kPayoffs, testing::MutatePayoff},
      {"hiding", Criterion::kIndistinguishability, testing::StripHiding},
  };
  for (const Case& c : cases) {
    CAPTURE(c.name);
    Ludeme mutated = clean;
    REQUIRE(c.mutate(mutated));
    REQUIRE_FALSE(mutated == clean);
    EquivalenceReport r = VerifyTree(g, mutated);
    CHECK(FailedSet(r) == std::set<Criterion>{c.target});
    REQUIRE_FALSE(r.at(c.target).counterexamples.empty());
    CHECK_FALSE(r.at(c.target).counterexamples.front().trajectory.empty());
  }
}

TEST_CASE("counterexamples name the trajectory") {
  const ExtensiveFormGame g = testing::SmallImperfectGame();
  Ludeme game = Compile(g).root;
  REQUIRE(testing::MutatePayoff(game));
  EquivalenceReport r = VerifyTree(g, game);
  const Counterexample& ce = r.at(Criterion::kPayoffs).counterexamples.at(0);
  // The first end clause is state 4, reached through 0 -> 1 -> 4.
  CHECK(ce.trajectory == std::vector<StateId>{0, 1, 4});
  CHECK(ce.detail.find("terminal state 4") != std::string::npos);
  CHECK(r.ToRecords().find("counterexample criterion=2e trajectory=0,1,4") != std::string::npos);
}

TEST_CASE("a misplaced move target fails criterion 2a") {
  const ExtensiveFormGame g = testing::SmallImperfectGame();
  std::string text = Compile(g).Render();
  // Send the neutral marker from 1 to 5, a state that is not a child of 1.
  const std::string from = "(fromTo (from 1) (to 4))";
  text.replace(text.find(from), from.size(), "(fromTo (from 1) (to 5))");
  EquivalenceReport r = VerifyDescription(g, text);
  CHECK(r.Failed(Criterion::kEquivalentStates));
  CHECK(r.at(Criterion::kEquivalentStates).counterexamples.at(0).detail.find("not a successor") !=
        std::string::npos);
}

TEST_CASE("indistinguishability failures report both directions") {
  const ExtensiveFormGame g = testing::SmallImperfectGame();
  Ludeme game = Compile(g).root;
  REQUIRE(testing::StripHiding(game));
  EquivalenceReport r = VerifyTree(g, game);
  const CriterionResult& c3 = r.at(Criterion::kIndistinguishability);
  REQUIRE(c3.status == CriterionResult::Status::kFail);
  bool views_differ = false;
  for (const Counterexample& ce : c3.counterexamples) {
    CHECK(ce.player.has_value());
    CHECK(ce.other_state.has_value());
    if (ce.differing_vertex >= 0) views_differ = true;
  }
  CHECK(views_differ);

  // Merging states 1 and 2 for player 2 in the source while the description
  // keeps them apart breaks the other direction.
  ExtensiveFormGame merged(2, g.nodes(),
                           {g.partition(1), InformationPartition::FromSets(11, {{3, 5}, {1, 2}})});
  EquivalenceReport r2 = VerifyDescription(merged, Compile(g).Render());
  CHECK(FailedSet(r2) == std::set<Criterion>{Criterion::kIndistinguishability});

  ExtensiveFormGame split(2, g.nodes(), {g.partition(1), InformationPartition::Singletons(11)});
  EquivalenceReport r3 = VerifyDescription(split, Compile(g).Render());
  CHECK(FailedSet(r3) == std::set<Criterion>{Criterion::kIndistinguishability});
  bool equal_views = false;
  for (const Counterexample& ce : r3.at(Criterion::kIndistinguishability).counterexamples) {
    equal_views |= ce.detail.find("identically") != std::string::npos;
  }
  CHECK(equal_views);
}

TEST_CASE("fault injection on generated games") {
  int applied = 0;
  for (std::uint64_t seed : testing::SuiteSeeds(6)) {
    const ExtensiveFormGame g = GenerateGame({}, seed);
    const Ludeme clean = Compile(g).root;
    CAPTURE(seed);
    std::pair<Criterion, std::function<bool(Ludeme&)>> mutations[] = {
        {Criterion::kMover, [&](Ludeme& l) { return testing::MutateNextPlayer(l, g); }},
        {Criterion::kBranching, testing::MutateDeleteMove},
        {Criterion::kChance, testing::MutateWeight},
        {Criterion::kPayoffs, testing::MutatePayoff},
        {Criterion::kIndistinguishability, testing::StripHiding},
    };
    for (auto& [target, mutate] : mutations) {
      Ludeme mutated = clean;
      if (!mutate(mutated)) continue;
      ++applied;
      CHECK(FailedSet(VerifyTree(g, mutated)) == std::set<Criterion>{target});
    }
  }
  CHECK(applied >= 20);
}

TEST_CASE("deleting a move loses trajectories") {
  const ExtensiveFormGame g = testing::SmallImperfectGame();
  Ludeme game = Compile(g).root;
  REQUIRE(testing::MutateDeleteMove(game));
  EquivalenceReport r = VerifyTree(g, game);
  CHECK(r.Failed(Criterion::kTrajectoryBijection));
}

TEST_CASE("statistical check on the one-third game") {
  const ExtensiveFormGame g = testing::ThirdsGame();
  LudiiAst ast = ParseLgdl(Compile(g).Render());
  StatisticalReport a = StatisticalPlayoutCheck(g, ast, 10000, 42);
  StatisticalReport b = StatisticalPlayoutCheck(g, ast, 10000, 42);
  CHECK(a.passed);
  REQUIRE(a.leaves.size() == 2);
  CHECK(a.leaves[0].expected == doctest::Approx(1.0 / 3));
  CHECK(a.leaves[0].observed + a.leaves[1].observed == 10000);
  CHECK(a.ToRecords() == b.ToRecords());
  CHECK(a.max_abs_deviation <= 3 * std::sqrt((1.0 / 3) * (2.0 / 3) / 10000));
  CHECK_THROWS_AS(StatisticalPlayoutCheck(g, ast, 0, 1), ArgumentError);
  CHECK_THROWS_AS(StatisticalPlayoutCheck(g, ast, 10, 1, 0.0), ArgumentError);
}

TEST_CASE("a single-trajectory game has no deviation") {
  ExtensiveFormGame g(1, {MakeDecisionNode(0, 1, {1}), MakeTerminalNode(1, {Decimal::Parse("1")})});
  StatisticalReport r = StatisticalPlayoutCheck(g, ParseLgdl(Compile(g).Render()), 50, 3);
  CHECK(r.passed);
  CHECK(r.max_abs_deviation == 0.0);
}

TEST_CASE("a skewed description fails the statistical check") {
  const ExtensiveFormGame g = testing::ThirdsGame();
  std::string text = Compile(g).Render();
  text.replace(text.find("(random {1 2}"), 13, "(random {1 1}");
  StatisticalReport r = StatisticalPlayoutCheck(g, ParseLgdl(text), 10000, 42);
  CHECK_FALSE(r.passed);
}

TEST_CASE("rare leaves are pooled") {
  ExtensiveFormGame g(1, {MakeChanceNode(0, {1, 2}, {Rational(1, 1000), Rational(999, 1000)}),
                          MakeTerminalNode(1, {Decimal::Parse("0")}),
                          MakeTerminalNode(2, {Decimal::Parse("1")})});
  StatisticalReport r = StatisticalPlayoutCheck(g, ParseLgdl(Compile(g).Render()), 100, 5);
  REQUIRE(r.leaves.size() == 3);
  CHECK(r.leaves[0].pooled);
  CHECK_FALSE(r.leaves[1].pooled);
  CHECK(r.leaves[2].leaf == -1);
}

}  // namespace
}  // namespace efg2ludii
