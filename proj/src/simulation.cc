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

#include "efg2ludii/simulation.h"

#include <map>
#include <sstream>

#include "efg2ludii/rng.h"

namespace efg2ludii {

SimulationResult Simulate(const LudiiAst& ast, std::uint64_t n, std::uint64_t seed) {
  SimulationResult result;
  result.seed = seed;
  result.mean_payoffs.assign(ast.num_players(), 0.0);
  for (std::uint64_t i = 0; i < n; ++i) {
    result.playouts.push_back(Playout(ast, DeriveSeed(seed, i)));
    const std::vector<Decimal>& payoffs = result.playouts.back().payoffs;
    for (std::size_t p = 0; p < payoffs.size() && p < result.mean_payoffs.size(); ++p) {
      result.mean_payoffs[p] += payoffs[p].ToDouble();
    }
  }
  if (n > 0) {
    for (double& m : result.mean_payoffs) m /= static_cast<double>(n);
  }
  return result;
}

std::string SimulationResult::ToRecords() const {
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < playouts.size(); ++i) {
    const PlayoutResult& r = playouts[i];
    for (std::size_t t = 0; t < r.steps.size(); ++t) {
      os << "playout=" << i << " step=" << t << " before=" << r.steps[t].before
         << " select=" << r.steps[t].select << " after=" << r.steps[t].after << "\n";
    }
    os << "playout=" << i << " leaf=" << r.leaf << " payoffs=";
    for (std::size_t p = 0; p < r.payoffs.size(); ++p) os << (p ? "," : "") << r.payoffs[p];
    os << "\n";
  }
  os << "playouts=" << playouts.size() << " seed=" << seed << " mean_payoffs=";
  for (std::size_t p = 0; p < mean_payoffs.size(); ++p) os << (p ? "," : "") << mean_payoffs[p];
  os << "\n";
  return os.str();
}

std::string SimulationResult::ToSummary() const {
  std::map<int, std::uint64_t> leaves;
  for (const PlayoutResult& r : playouts) ++leaves[r.leaf];
  std::ostringstream os;
  os.precision(6);
  os << playouts.size() << " playouts, seed " << seed << "\n";
  for (const auto& [leaf, count] : leaves) {
    os << "  leaf " << leaf << ": " << count << "\n";
  }
  os << "  mean payoffs:";
  for (std::size_t p = 0; p < mean_payoffs.size(); ++p) {
    os << " P" << p + 1 << "=" << mean_payoffs[p];
  }
  os << "\n";
  return os.str();
}

}  // namespace efg2ludii
