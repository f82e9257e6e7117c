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

#include "efg2ludii/efg2ludii.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "efg2ludii/checker.h"
#include "efg2ludii/efg.h"
#include "efg2ludii/efg_parser.h"
#include "efg2ludii/emitter.h"
#include "efg2ludii/errors.h"
#include "efg2ludii/game_stats.h"
#include "efg2ludii/generator.h"
#include "efg2ludii/interpreter.h"
#include "efg2ludii/simulation.h"

struct e2l_game {
  efg2ludii::ExtensiveFormGame game;
};

namespace {

thread_local std::string last_error;

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

e2l_status Fail(e2l_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, mapping library exceptions to status codes.
template <typename F>
e2l_status Guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const efg2ludii::ParseError& e) {
    return Fail(E2L_ERROR_PARSE, e.what());
  } catch (const efg2ludii::InvalidGameError& e) {
    return Fail(E2L_ERROR_INVALID, e.what());
  } catch (const efg2ludii::ArgumentError& e) {
    return Fail(E2L_ERROR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(E2L_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(E2L_ERROR_INTERNAL, e.what());
  } catch (...) {
    return Fail(E2L_ERROR_INTERNAL, "unknown error");
  }
}

bool Store(char** out, const std::string& s) {
  if (!out) return true;
  *out = CopyString(s);
  return *out != nullptr;
}

}  // namespace

extern "C" {

const char* e2l_last_error(void) { return last_error.c_str(); }

void e2l_string_free(char* s) { std::free(s); }

void e2l_generator_defaults(e2l_generator_params* params) {
  if (!params) return;
  efg2ludii::GeneratorParams d;
  *params = {d.max_nodes, d.max_branching, d.chance_rate, d.merge_rate, d.players, d.max_depth};
}

e2l_status e2l_game_parse(const char* text, size_t len, e2l_game** out) {
  if (!text || !out) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new e2l_game{efg2ludii::ParseEfg(std::string_view(text, len))};
    return E2L_OK;
  });
}

e2l_status e2l_game_generate(const e2l_generator_params* params, uint64_t seed, e2l_game** out) {
  if (!out) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    efg2ludii::GeneratorParams p;
    if (params) {
      p = {params->max_nodes, params->max_branching, params->chance_rate,
           params->merge_rate, params->players,       params->max_depth};
    }
    *out = new e2l_game{efg2ludii::GenerateGame(p, seed)};
    return E2L_OK;
  });
}

void e2l_game_free(e2l_game* game) { delete game; }

e2l_status e2l_game_serialize(const e2l_game* game, char** out) {
  if (!game || !out) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    return Store(out, efg2ludii::SerializeEfg(game->game)) ? E2L_OK
                                                           : Fail(E2L_ERROR_INTERNAL, "out of memory");
  });
}

int e2l_game_num_players(const e2l_game* game) { return game ? game->game.num_players() : -1; }

int e2l_game_num_states(const e2l_game* game) { return game ? game->game.num_states() : -1; }

e2l_status e2l_game_info(const e2l_game* game, char** out) {
  if (!game || !out) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    efg2ludii::RequireValid(game->game);
    return Store(out, efg2ludii::ComputeStats(game->game).ToRecords())
               ? E2L_OK
               : Fail(E2L_ERROR_INTERNAL, "out of memory");
  });
}

e2l_status e2l_game_normalize(const e2l_game* game, e2l_game** out, char** transforms) {
  if (!game || !out) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    efg2ludii::RequireValid(game->game);
    const efg2ludii::EfgNode& root = game->game.node(0);
    std::string applied;
    if (root.IsDecision() && root.mover != 1) {
      applied = "relabel players " + std::to_string(root.mover) + " <-> 1\n";
    }
    *out = new e2l_game{efg2ludii::RelabelFirstMover(game->game)};
    if (!Store(transforms, applied)) {
      e2l_game_free(*out);
      *out = nullptr;
      return Fail(E2L_ERROR_INTERNAL, "out of memory");
    }
    return E2L_OK;
  });
}

e2l_status e2l_compile(const e2l_game* game, const char* name, char** out) {
  if (!game || !out) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    std::string text = efg2ludii::Compile(game->game, name ? name : "Game").Render();
    return Store(out, text) ? E2L_OK : Fail(E2L_ERROR_INTERNAL, "out of memory");
  });
}

e2l_status e2l_verify(const e2l_game* game, const char* lud, size_t len, char** report,
                      char** summary, int* all_passed) {
  if (!game || !lud || !report || !all_passed) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    efg2ludii::RequireValid(game->game);
    efg2ludii::EquivalenceReport r =
        efg2ludii::VerifyDescription(game->game, std::string_view(lud, len));
    *all_passed = r.AllPassed() ? 1 : 0;
    if (summary) *summary = nullptr;
    if (!Store(report, r.ToRecords())) return Fail(E2L_ERROR_INTERNAL, "out of memory");
    if (!Store(summary, r.ToSummary())) {
      e2l_string_free(*report);
      *report = nullptr;
      return Fail(E2L_ERROR_INTERNAL, "out of memory");
    }
    return E2L_OK;
  });
}

e2l_status e2l_simulate(const char* lud, size_t len, uint64_t n, uint64_t seed, char** records,
                        char** summary) {
  if (!lud || !records) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    efg2ludii::LudiiAst ast = efg2ludii::ParseLgdl(std::string_view(lud, len));
    efg2ludii::SimulationResult result = efg2ludii::Simulate(ast, n, seed);
    if (summary) *summary = nullptr;
    if (!Store(records, result.ToRecords())) return Fail(E2L_ERROR_INTERNAL, "out of memory");
    if (!Store(summary, result.ToSummary())) {
      e2l_string_free(*records);
      *records = nullptr;
      return Fail(E2L_ERROR_INTERNAL, "out of memory");
    }
    return E2L_OK;
  });
}

e2l_status e2l_statistical_check(const e2l_game* game, const char* lud, size_t len, uint64_t n,
                                 uint64_t seed, double z, char** report, int* passed) {
  if (!game || !lud || !report || !passed) return Fail(E2L_ERROR_ARGUMENT, "null argument");
  return Guard([&] {
    efg2ludii::RequireValid(game->game);
    efg2ludii::LudiiAst ast = efg2ludii::ParseLgdl(std::string_view(lud, len));
    efg2ludii::StatisticalReport r =
        efg2ludii::StatisticalPlayoutCheck(game->game, ast, n, seed, z);
    *passed = r.passed ? 1 : 0;
    return Store(report, r.ToRecords()) ? E2L_OK : Fail(E2L_ERROR_INTERNAL, "out of memory");
  });
}

}  // extern "C"
