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

#ifndef EFG2LUDII_CHECKER_H_
#define EFG2LUDII_CHECKER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efg2ludii/efg.h"
#include "efg2ludii/interpreter.h"

namespace efg2ludii {

// The equivalence criteria between a source game and its description, plus
// the trajectory bijection that ties them together.
enum class Criterion {
  kSubsetValidity,        // 1
  kEquivalentStates,      // 2a
  kMover,                 // 2b
  kBranching,             // 2c
  kChance,                // 2d
  kPayoffs,               // 2e
  kIndistinguishability,  // 3
  kTrajectoryBijection,
};

inline constexpr Criterion kAllCriteria[] = {
    Criterion::kSubsetValidity, Criterion::kEquivalentStates, Criterion::kMover,
    Criterion::kBranching,      Criterion::kChance,           Criterion::kPayoffs,
    Criterion::kIndistinguishability, Criterion::kTrajectoryBijection};

// "1", "2a", ..., "3", "bijection".
std::string_view CriterionId(Criterion c);
std::string_view CriterionName(Criterion c);

struct Counterexample {
  // Source states from the root to the state where the check failed; replay
  // by following these states in the source tree.
  std::vector<StateId> trajectory;
  std::string detail;
  // Criterion 3 only.
  std::optional<PlayerId> player;
  std::optional<StateId> other_state;
  int differing_vertex = -1;
  bool depth_mismatch = false;
};

struct CriterionResult {
  Criterion criterion;
  enum class Status { kSkipped, kPass, kFail } status = Status::kSkipped;
  int failure_count = 0;
  // The first few failures.
  std::vector<Counterexample> counterexamples;
};

struct EquivalenceReport {
  std::vector<CriterionResult> results;
  int source_states = 0;
  int pairs_visited = 0;
  int views_compared = 0;

  EquivalenceReport();
  CriterionResult& at(Criterion c);
  const CriterionResult& at(Criterion c) const;
  bool Passed(Criterion c) const;
  bool Failed(Criterion c) const;
  // True if nothing failed (skipped criteria do not count against it).
  bool AllPassed() const;
  std::vector<Criterion> FailedCriteria() const;

  void Merge(const EquivalenceReport& other);

  // One `key=value` record per line.
  std::string ToRecords() const;
  std::string ToSummary() const;
};

// Criteria 1, 2a-2e and the trajectory bijection, by walking the source tree
// and the interpreter in lockstep from (root, initial state).
EquivalenceReport CheckEquivalence(const ExtensiveFormGame& game, const LudiiAst& ast);

// Criterion 3: for every player and every pair of reached states, the
// player's views agree exactly when the states share an information set.
EquivalenceReport CheckIndistinguishability(const ExtensiveFormGame& game,
                                            const LudiiAst& ast);

// Both checks on description text; a text that fails to parse fails
// criterion 1 and skips the rest.
EquivalenceReport VerifyDescription(const ExtensiveFormGame& game, std::string_view lud_text);

struct LeafFrequency {
  StateId leaf = -1;
  double expected = 0.0;
  std::uint64_t observed = 0;
  double deviation = 0.0;
  double bound = 0.0;
  // Expected count below kMinExpectedCount; tested as part of the pooled
  // bucket (leaf -1) instead of on its own.
  bool pooled = false;
};

inline constexpr double kMinExpectedCount = 5.0;

struct StatisticalReport {
  std::uint64_t playouts = 0;
  double z = 3.0;
  double max_abs_deviation = 0.0;
  bool passed = true;
  std::vector<LeafFrequency> leaves;
  std::vector<std::string> problems;

  std::string ToRecords() const;
};

// Runs `n` playouts (playout i seeded with DeriveSeed(seed, i)) with uniform
// choices at decision states and compares leaf frequencies with the exact
// distribution. A leaf passes if |observed - p| <= z * sqrt(p (1 - p) / n);
// leaves expected fewer than kMinExpectedCount times are pooled into one
// bucket tested the same way.
StatisticalReport StatisticalPlayoutCheck(const ExtensiveFormGame& game, const LudiiAst& ast,
                                          std::uint64_t n, std::uint64_t seed, double z = 3.0);

}  // namespace efg2ludii

#endif  // EFG2LUDII_CHECKER_H_
