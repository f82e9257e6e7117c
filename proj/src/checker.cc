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

#include "efg2ludii/checker.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "efg2ludii/errors.h"

namespace efg2ludii {
namespace {

constexpr std::size_t kMaxCounterexamples = 8;

// Visited pairs remember their parent so failures can name a trajectory.
struct PairRecord {
  StateId state;
  int parent;
  int depth;
};

std::vector<StateId> TrajectoryOf(const std::vector<PairRecord>& records, int index) {
  std::vector<StateId> path;
  for (int r = index; r >= 0; r = records[r].parent) path.push_back(records[r].state);
  std::reverse(path.begin(), path.end());
  return path;
}

void AddFailure(EquivalenceReport& report, Criterion c, Counterexample ce) {
  CriterionResult& result = report.at(c);
  result.status = CriterionResult::Status::kFail;
  ++result.failure_count;
  if (result.counterexamples.size() < kMaxCounterexamples) {
    result.counterexamples.push_back(std::move(ce));
  }
}

void PassIfUnfailed(EquivalenceReport& report, Criterion c) {
  CriterionResult& result = report.at(c);
  if (result.status == CriterionResult::Status::kSkipped) {
    result.status = CriterionResult::Status::kPass;
  }
}

int ChildIndex(const EfgNode& node, int vertex) {
  auto it = std::find(node.children.begin(), node.children.end(), vertex);
  return it == node.children.end() ? -1 : static_cast<int>(it - node.children.begin());
}

std::string PayoffText(const std::vector<Decimal>& payoffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (i) out += ", ";
    out += payoffs[i].ToString();
  }
  return out + "]";
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Leaves reached by exhaustively playing the description, each with the
// product of its chance-branch probabilities. Returns false if the
// description has dead ends or is larger than `budget` states.
bool InterpreterTrajectories(const LudiiAst& ast, int budget,
                             std::vector<std::pair<StateId, Rational>>& out,
                             std::string& problem) {
  struct Frame {
    InterpreterState state;
    Rational prob;
  };
  std::vector<Frame> stack;
  try {
    stack.push_back({InitialState(ast), Rational(1)});
    int expanded = 0;
    while (!stack.empty()) {
      Frame frame = std::move(stack.back());
      stack.pop_back();
      if (++expanded > budget) {
        problem = "description has more than " + std::to_string(budget) + " reachable states";
        return false;
      }
      if (frame.state.terminal) {
        out.emplace_back(frame.state.NeutralVertex(), frame.prob);
        continue;
      }
      MoveResolution res = LegalMoves(ast, frame.state);
      if (res.IsChance()) {
        BigInt total = 0;
        for (const ChanceBranch& b : res.branches) total += b.weight;
        for (const ChanceBranch& b : res.branches) {
          if (b.moves.empty()) {
            problem = "empty chance branch at vertex " + std::to_string(frame.state.NeutralVertex());
            return false;
          }
          Rational p = frame.prob * Rational(b.weight, total);
          for (const MoveChoice& m : b.moves) {
            stack.push_back({ApplyMove(ast, frame.state, m), p});
          }
        }
      } else {
        if (res.moves.empty()) {
          problem = "no legal moves in non-terminal state with neutral marker at " +
                    std::to_string(frame.state.NeutralVertex());
          return false;
        }
        for (const MoveChoice& m : res.moves) {
          stack.push_back({ApplyMove(ast, frame.state, m), frame.prob});
        }
      }
    }
  } catch (const EffectError& e) {
    problem = std::string("move could not be applied: ") + e.what();
    return false;
  }
  return true;
}

void CheckBijection(const ExtensiveFormGame& game, const LudiiAst& ast,
                    const std::vector<bool>& reached, EquivalenceReport& report) {
  for (StateId s = 0; s < game.num_states(); ++s) {
    if (!reached[s]) {
      AddFailure(report, Criterion::kTrajectoryBijection,
                 {{}, "state " + std::to_string(s) + " has no reachable equivalent state"});
    }
  }
  std::vector<std::pair<StateId, Rational>> source;
  for (const Trajectory& t : EnumerateTrajectories(game)) {
    source.emplace_back(t.states.back(), t.probability);
  }
  std::vector<std::pair<StateId, Rational>> induced;
  std::string problem;
  if (!InterpreterTrajectories(ast, 4 * game.num_states() + 64, induced, problem)) {
    AddFailure(report, Criterion::kTrajectoryBijection, {{}, problem});
    return;
  }
  std::sort(source.begin(), source.end());
  std::sort(induced.begin(), induced.end());
  if (source != induced) {
    std::size_t i = 0;
    while (i < source.size() && i < induced.size() && source[i] == induced[i]) ++i;
    std::string detail = "trajectory multisets differ (" + std::to_string(source.size()) +
                         " source, " + std::to_string(induced.size()) + " induced)";
    if (i < source.size()) {
      detail += "; source has leaf " + std::to_string(source[i].first) + " with probability " +
                source[i].second.ToString();
    }
    if (i < induced.size()) {
      detail += "; description has leaf " + std::to_string(induced[i].first) +
                " with probability " + induced[i].second.ToString();
    }
    AddFailure(report, Criterion::kTrajectoryBijection, {{}, detail});
  }
}

}  // namespace

std::string_view CriterionId(Criterion c) {
  switch (c) {
    case Criterion::kSubsetValidity: return "1";
    case Criterion::kEquivalentStates: return "2a";
    case Criterion::kMover: return "2b";
    case Criterion::kBranching: return "2c";
    case Criterion::kChance: return "2d";
    case Criterion::kPayoffs: return "2e";
    case Criterion::kIndistinguishability: return "3";
    case Criterion::kTrajectoryBijection: return "bijection";
  }
  return "?";
}

std::string_view CriterionName(Criterion c) {
  switch (c) {
    case Criterion::kSubsetValidity: return "subset-validity";
    case Criterion::kEquivalentStates: return "equivalent-states";
    case Criterion::kMover: return "mover";
    case Criterion::kBranching: return "branching";
    case Criterion::kChance: return "chance";
    case Criterion::kPayoffs: return "payoffs";
    case Criterion::kIndistinguishability: return "indistinguishability";
    case Criterion::kTrajectoryBijection: return "trajectory-bijection";
  }
  return "?";
}

EquivalenceReport::EquivalenceReport() {
  for (Criterion c : kAllCriteria) results.push_back({c});
}

CriterionResult& EquivalenceReport::at(Criterion c) {
  return results.at(static_cast<std::size_t>(c));
}

const CriterionResult& EquivalenceReport::at(Criterion c) const {
  return results.at(static_cast<std::size_t>(c));
}

bool EquivalenceReport::Passed(Criterion c) const {
  return at(c).status == CriterionResult::Status::kPass;
}

bool EquivalenceReport::Failed(Criterion c) const {
  return at(c).status == CriterionResult::Status::kFail;
}

bool EquivalenceReport::AllPassed() const { return FailedCriteria().empty(); }

std::vector<Criterion> EquivalenceReport::FailedCriteria() const {
  std::vector<Criterion> out;
  for (const CriterionResult& r : results) {
    if (r.status == CriterionResult::Status::kFail) out.push_back(r.criterion);
  }
  return out;
}

void EquivalenceReport::Merge(const EquivalenceReport& other) {
  for (const CriterionResult& theirs : other.results) {
    CriterionResult& mine = at(theirs.criterion);
    using Status = CriterionResult::Status;
    if (theirs.status == Status::kFail || mine.status == Status::kSkipped) {
      if (mine.status != Status::kFail) mine.status = theirs.status;
    }
    mine.failure_count += theirs.failure_count;
    for (const Counterexample& ce : theirs.counterexamples) {
      if (mine.counterexamples.size() < kMaxCounterexamples) mine.counterexamples.push_back(ce);
    }
  }
  source_states = std::max(source_states, other.source_states);
  pairs_visited = std::max(pairs_visited, other.pairs_visited);
  views_compared += other.views_compared;
}

std::string EquivalenceReport::ToRecords() const {
  std::ostringstream os;
  for (const CriterionResult& r : results) {
    const char* status = r.status == CriterionResult::Status::kPass   ? "pass"
                         : r.status == CriterionResult::Status::kFail ? "fail"
                                                                      : "skipped";
    int depth_mismatches = 0;
    for (const Counterexample& ce : r.counterexamples) depth_mismatches += ce.depth_mismatch;
    os << "criterion=" << CriterionId(r.criterion) << " name=" << CriterionName(r.criterion)
       << " status=" << status << " failures=" << r.failure_count;
    if (r.criterion == Criterion::kIndistinguishability) {
      os << " depth_mismatched=" << depth_mismatches;
    }
    os << "\n";
    for (const Counterexample& ce : r.counterexamples) {
      os << "counterexample criterion=" << CriterionId(r.criterion) << " trajectory=";
      for (std::size_t i = 0; i < ce.trajectory.size(); ++i) {
        os << (i ? "," : "") << ce.trajectory[i];
      }
      if (ce.player) os << " player=" << *ce.player;
      if (ce.other_state) os << " other_state=" << *ce.other_state;
      if (ce.differing_vertex >= 0) os << " vertex=" << ce.differing_vertex;
      if (ce.depth_mismatch) os << " depth_mismatch=1";
      os << " detail=" << Quote(ce.detail) << "\n";
    }
  }
  os << "source_states=" << source_states << " pairs_visited=" << pairs_visited
     << " views_compared=" << views_compared << "\n";
  os << "overall=" << (AllPassed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string EquivalenceReport::ToSummary() const {
  std::ostringstream os;
  for (const CriterionResult& r : results) {
    os << "  [" << (r.status == CriterionResult::Status::kPass   ? "PASS"
                    : r.status == CriterionResult::Status::kFail ? "FAIL"
                                                                 : "SKIP")
       << "] " << CriterionId(r.criterion) << " " << CriterionName(r.criterion);
    if (r.failure_count) os << " (" << r.failure_count << " failures)";
    os << "\n";
    if (!r.counterexamples.empty()) os << "         e.g. " << r.counterexamples.front().detail << "\n";
  }
  os << "  " << pairs_visited << " of " << source_states << " states paired, "
     << views_compared << " views compared\n";
  os << (AllPassed() ? "equivalent" : "NOT equivalent") << "\n";
  return os.str();
}

EquivalenceReport CheckEquivalence(const ExtensiveFormGame& game, const LudiiAst& ast) {
  EquivalenceReport report;
  report.source_states = game.num_states();
  report.at(Criterion::kSubsetValidity).status = CriterionResult::Status::kPass;
  const std::vector<int> depth = DepthTable(game);
  std::vector<bool> reached(game.num_states(), false);
  std::vector<PairRecord> records;

  struct Frame {
    int record;
    InterpreterState state;
  };
  std::vector<Frame> stack;
  try {
    stack.push_back({0, InitialState(ast)});
  } catch (const EffectError& e) {
    AddFailure(report, Criterion::kEquivalentStates,
               {{0}, std::string("start rules could not be applied: ") + e.what()});
    return report;
  }
  records.push_back({0, -1, 0});
  reached[0] = true;

  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const PairRecord rec = records[frame.record];
    const StateId s = rec.state;
    const EfgNode& node = game.node(s);
    const InterpreterState& st = frame.state;
    auto fail = [&](Criterion c, std::string detail) {
      AddFailure(report, c, {TrajectoryOf(records, frame.record), std::move(detail)});
    };
    ++report.pairs_visited;

    const int neutral_count = st.CountOwnedBy(0);
    if (neutral_count != 1) {
      fail(Criterion::kEquivalentStates,
           "state " + std::to_string(s) + ": " + std::to_string(neutral_count) + " neutral markers");
    } else if (st.NeutralVertex() != s) {
      fail(Criterion::kEquivalentStates, "state " + std::to_string(s) + ": neutral marker at vertex " +
                                             std::to_string(st.NeutralVertex()));
    }
    if (rec.depth != depth[s]) {
      fail(Criterion::kEquivalentStates, "state " + std::to_string(s) + " reached after " +
                                             std::to_string(rec.depth) + " transitions, expected " +
                                             std::to_string(depth[s]));
    }

    if (node.IsTerminal()) {
      if (!st.terminal) {
        fail(Criterion::kPayoffs, "terminal state " + std::to_string(s) + " has a non-terminal equivalent");
      } else if (*st.terminal != node.payoffs) {
        fail(Criterion::kPayoffs, "terminal state " + std::to_string(s) + ": payoffs " +
                                      PayoffText(*st.terminal) + ", expected " + PayoffText(node.payoffs));
      }
      continue;
    }
    if (st.terminal) {
      fail(Criterion::kPayoffs, "inner state " + std::to_string(s) + " has a terminal equivalent");
      continue;
    }

    MoveResolution res = LegalMoves(ast, st);
    std::vector<const MoveChoice*> moves;
    if (res.IsChance()) {
      for (const ChanceBranch& b : res.branches) {
        for (const MoveChoice& m : b.moves) moves.push_back(&m);
      }
    } else {
      for (const MoveChoice& m : res.moves) moves.push_back(&m);
    }

    if (node.IsDecision()) {
      if (st.mover != node.mover) {
        fail(Criterion::kMover, "state " + std::to_string(s) + ": mover " + std::to_string(st.mover) +
                                    ", expected " + std::to_string(node.mover));
      }
      if (res.IsChance()) {
        fail(Criterion::kBranching, "decision state " + std::to_string(s) + " resolves to a chance event");
      } else if (res.moves.size() != node.children.size()) {
        fail(Criterion::kBranching, "state " + std::to_string(s) + ": " + std::to_string(res.moves.size()) +
                                        " legal moves, expected " + std::to_string(node.children.size()));
      }
    }

    // Successor of every move; -1 if the move could not be applied.
    std::vector<std::optional<InterpreterState>> next(moves.size());
    std::vector<int> target(moves.size(), -1);
    for (std::size_t m = 0; m < moves.size(); ++m) {
      try {
        next[m] = ApplyMove(ast, st, *moves[m]);
        target[m] = next[m]->NeutralVertex();
      } catch (const EffectError& e) {
        fail(Criterion::kEquivalentStates, "state " + std::to_string(s) + ": move selecting " +
                                               std::to_string(moves[m]->select_vertex) +
                                               " could not be applied: " + e.what());
      }
    }

    if (node.IsChance()) {
      if (!res.IsChance()) {
        fail(Criterion::kChance, "chance state " + std::to_string(s) + " resolves to deterministic moves");
      } else {
        BigInt total = 0;
        for (const ChanceBranch& b : res.branches) total += b.weight;
        std::vector<Rational> induced(node.children.size());
        std::size_t m = 0;
        for (const ChanceBranch& b : res.branches) {
          if (b.moves.size() != 1) {
            fail(Criterion::kChance, "chance state " + std::to_string(s) + ": branch with " +
                                         std::to_string(b.moves.size()) + " legal moves");
          } else if (int idx = ChildIndex(node, target[m]); idx >= 0) {
            induced[idx] += Rational(b.weight, total);
          }
          m += b.moves.size();
        }
        for (std::size_t c = 0; c < node.children.size(); ++c) {
          if (induced[c] != node.chance_probs[c]) {
            fail(Criterion::kChance, "chance state " + std::to_string(s) + " -> " +
                                         std::to_string(node.children[c]) + ": probability " +
                                         induced[c].ToString() + ", expected " +
                                         node.chance_probs[c].ToString());
          }
        }
      }
    }

    for (std::size_t m = moves.size(); m-- > 0;) {
      if (!next[m]) continue;
      const int idx = ChildIndex(node, target[m]);
      if (idx < 0) {
        fail(Criterion::kEquivalentStates, "state " + std::to_string(s) + ": move selecting " +
                                               std::to_string(moves[m]->select_vertex) +
                                               " puts the neutral marker on vertex " +
                                               std::to_string(target[m]) + ", not a successor");
        continue;
      }
      const StateId child = node.children[idx];
      if (reached[child]) continue;
      reached[child] = true;
      records.push_back({child, frame.record, rec.depth + 1});
      stack.push_back({static_cast<int>(records.size()) - 1, std::move(*next[m])});
    }
  }

  CheckBijection(game, ast, reached, report);
  for (Criterion c : {Criterion::kEquivalentStates, Criterion::kMover, Criterion::kBranching,
                      Criterion::kChance, Criterion::kPayoffs, Criterion::kTrajectoryBijection}) {
    PassIfUnfailed(report, c);
  }
  return report;
}

EquivalenceReport CheckIndistinguishability(const ExtensiveFormGame& game, const LudiiAst& ast) {
  EquivalenceReport report;
  report.source_states = game.num_states();
  report.at(Criterion::kSubsetValidity).status = CriterionResult::Status::kPass;
  const int k = game.num_players();
  if (ast.num_players() != k) {
    AddFailure(report, Criterion::kIndistinguishability,
               {{}, "description has " + std::to_string(ast.num_players()) + " players, source has " +
                        std::to_string(k)});
    return report;
  }

  std::vector<PairRecord> records;
  // views[p - 1][record], one byte per vertex.
  std::vector<std::vector<std::string>> views(k);
  auto record_views = [&](const InterpreterState& st) {
    for (PlayerId p = 1; p <= k; ++p) {
      ObservationView view = Observe(ast, st, p);
      std::string key(view.cells.size(), '\0');
      for (std::size_t v = 0; v < view.cells.size(); ++v) {
        key[v] = static_cast<char>(view.cells[v]);
      }
      views[p - 1].push_back(std::move(key));
    }
  };

  std::vector<bool> reached(game.num_states(), false);
  struct Frame {
    int record;
    InterpreterState state;
  };
  std::vector<Frame> stack;
  try {
    InterpreterState initial = InitialState(ast);
    if (initial.NeutralVertex() == 0) {
      records.push_back({0, -1, 0});
      reached[0] = true;
      record_views(initial);
      stack.push_back({0, std::move(initial)});
    }
    while (!stack.empty()) {
      Frame frame = std::move(stack.back());
      stack.pop_back();
      const PairRecord rec = records[frame.record];
      const EfgNode& node = game.node(rec.state);
      if (node.IsTerminal() || frame.state.terminal) continue;
      MoveResolution res = LegalMoves(ast, frame.state);
      std::vector<const MoveChoice*> moves;
      for (const MoveChoice& m : res.moves) moves.push_back(&m);
      for (const ChanceBranch& b : res.branches) {
        for (const MoveChoice& m : b.moves) moves.push_back(&m);
      }
      for (const MoveChoice* m : moves) {
        InterpreterState next = ApplyMove(ast, frame.state, *m);
        const int idx = ChildIndex(node, next.NeutralVertex());
        if (idx < 0) continue;
        const StateId child = node.children[idx];
        if (reached[child]) continue;
        reached[child] = true;
        records.push_back({child, frame.record, rec.depth + 1});
        record_views(next);
        stack.push_back({static_cast<int>(records.size()) - 1, std::move(next)});
      }
    }
  } catch (const EffectError& e) {
    AddFailure(report, Criterion::kIndistinguishability,
               {{}, std::string("description could not be played: ") + e.what()});
    return report;
  }
  report.pairs_visited = static_cast<int>(records.size());

  for (PlayerId p = 1; p <= k; ++p) {
    const InformationPartition& part = game.partition(p);
    const std::vector<std::string>& pv = views[p - 1];
    std::unordered_map<std::string_view, int> by_view;
    std::unordered_map<InfosetId, int> by_infoset;
    for (int r = 0; r < static_cast<int>(records.size()); ++r) {
      ++report.views_compared;
      const StateId s = records[r].state;
      const InfosetId set = part.SetOf(s);
      auto [vit, fresh_view] = by_view.emplace(pv[r], r);
      if (!fresh_view) {
        const int f = vit->second;
        if (part.SetOf(records[f].state) != set) {
          Counterexample ce{TrajectoryOf(records, r),
                            "player " + std::to_string(p) + " sees states " +
                                std::to_string(records[f].state) + " and " + std::to_string(s) +
                                " identically, but their information sets differ"};
          ce.player = p;
          ce.other_state = records[f].state;
          ce.depth_mismatch = records[f].depth != records[r].depth;
          AddFailure(report, Criterion::kIndistinguishability, std::move(ce));
        }
      }
      auto [sit, fresh_set] = by_infoset.emplace(set, r);
      if (!fresh_set && pv[sit->second] != pv[r]) {
        const int f = sit->second;
        const std::string& a = pv[f];
        const std::string& b = pv[r];
        int vertex = 0;
        while (vertex < static_cast<int>(a.size()) && a[vertex] == b[vertex]) ++vertex;
        Counterexample ce{TrajectoryOf(records, r),
                          "player " + std::to_string(p) + " shares an information set between states " +
                              std::to_string(records[f].state) + " and " + std::to_string(s) +
                              " but their views differ at vertex " + std::to_string(vertex)};
        ce.player = p;
        ce.other_state = records[f].state;
        ce.differing_vertex = vertex;
        ce.depth_mismatch = records[f].depth != records[r].depth;
        AddFailure(report, Criterion::kIndistinguishability, std::move(ce));
      }
    }
  }
  PassIfUnfailed(report, Criterion::kIndistinguishability);
  return report;
}

EquivalenceReport VerifyDescription(const ExtensiveFormGame& game, std::string_view lud_text) {
  LudiiAst ast;
  try {
    ast = ParseLgdl(lud_text);
  } catch (const ParseError& e) {
    EquivalenceReport report;
    report.source_states = game.num_states();
    AddFailure(report, Criterion::kSubsetValidity, {{}, e.what()});
    return report;
  }
  EquivalenceReport report = CheckEquivalence(game, ast);
  report.Merge(CheckIndistinguishability(game, ast));
  return report;
}

std::string StatisticalReport::ToRecords() const {
  std::ostringstream os;
  os.precision(10);
  for (const LeafFrequency& leaf : leaves) {
    os << "leaf=" << leaf.leaf << " expected=" << leaf.expected << " observed=" << leaf.observed
       << " deviation=" << leaf.deviation << " bound=" << leaf.bound
       << (leaf.pooled ? " pooled=1" : "") << "\n";
  }
  for (const std::string& p : problems) os << "problem=" << Quote(p) << "\n";
  os << "playouts=" << playouts << " z=" << z << " max_abs_deviation=" << max_abs_deviation
     << " status=" << (passed ? "pass" : "fail") << "\n";
  return os.str();
}

StatisticalReport StatisticalPlayoutCheck(const ExtensiveFormGame& game, const LudiiAst& ast,
                                          std::uint64_t n, std::uint64_t seed, double z) {
  if (n == 0) throw ArgumentError("statistical check needs at least one playout");
  if (!(z > 0)) throw ArgumentError("tolerance must be positive");
  StatisticalReport report;
  report.playouts = n;
  report.z = z;

  // Exact leaf distribution with uniform choices at decision states.
  std::map<StateId, Rational> exact;
  std::vector<std::pair<StateId, Rational>> stack = {{0, Rational(1)}};
  while (!stack.empty()) {
    auto [s, p] = stack.back();
    stack.pop_back();
    const EfgNode& node = game.node(s);
    if (node.IsTerminal()) {
      exact[s] += p;
      continue;
    }
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      Rational q = node.IsChance()
                       ? p * node.chance_probs[c]
                       : p * Rational(1, static_cast<std::int64_t>(node.children.size()));
      stack.emplace_back(node.children[c], q);
    }
  }

  std::map<StateId, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < n; ++i) {
    try {
      PlayoutResult r = Playout(ast, DeriveSeed(seed, i));
      ++counts[r.leaf];
    } catch (const Error& e) {
      report.problems.push_back("playout " + std::to_string(i) + ": " + e.what());
      report.passed = false;
      break;
    }
  }
  for (const auto& [leaf, count] : counts) {
    if (!exact.count(leaf)) {
      report.problems.push_back("playouts ended at vertex " + std::to_string(leaf) +
                                ", not a terminal state");
      report.passed = false;
    }
  }
  const double dn = static_cast<double>(n);
  auto test = [&](LeafFrequency& f) {
    f.deviation = std::abs(static_cast<double>(f.observed) / dn - f.expected);
    f.bound = z * std::sqrt(f.expected * (1.0 - f.expected) / dn);
    if (f.pooled) return;
    report.max_abs_deviation = std::max(report.max_abs_deviation, f.deviation);
    if (f.deviation > f.bound + 1e-12) report.passed = false;
  };
  LeafFrequency rare;
  rare.leaf = -1;
  for (const auto& [leaf, prob] : exact) {
    LeafFrequency f;
    f.leaf = leaf;
    f.expected = prob.ToDouble();
    f.observed = counts.count(leaf) ? counts[leaf] : 0;
    f.pooled = f.expected * dn < kMinExpectedCount;
    if (f.pooled) {
      rare.expected += f.expected;
      rare.observed += f.observed;
    }
    test(f);
    report.leaves.push_back(f);
  }
  if (rare.expected > 0.0) {
    test(rare);
    report.leaves.push_back(rare);
  }
  return report;
}

}  // namespace efg2ludii
