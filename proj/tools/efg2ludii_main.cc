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

// Command-line front end: compile, verify, simulate, info and gen.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "efg2ludii/efg2ludii.h"

namespace {

enum ExitCode {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitInternalError = 3,
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string lud;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::uint64_t n = 0;
  double tolerance = 3.0;
  bool quiet = false;
  e2l_generator_params gen{};
};

struct StringDeleter {
  void operator()(char* s) const { e2l_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GameDeleter {
  void operator()(e2l_game* g) const { e2l_game_free(g); }
};
using Game = std::unique_ptr<e2l_game, GameDeleter>;

int ExitFor(e2l_status status) {
  switch (status) {
    case E2L_OK: return kExitOk;
    case E2L_ERROR_PARSE:
    case E2L_ERROR_INVALID:
    case E2L_ERROR_ARGUMENT: return kExitInputError;
    default: return kExitInternalError;
  }
}

struct ApiError {
  e2l_status status;
  std::string message;
};

void Check(e2l_status status) {
  if (status != E2L_OK) throw ApiError{status, e2l_last_error()};
}

std::string ReadFile(const std::string& path) {
  if (path.empty()) throw InputError("no input file given (--in)");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::uint64_t ResolveSeed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("EFG2LUDII_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      std::uint64_t value = std::stoull(env, &used, 0);
      if (used == std::strlen(env)) return value;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("EFG2LUDII_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

Game LoadGame(const std::string& path) {
  const std::string text = ReadFile(path);
  e2l_game* game = nullptr;
  e2l_status status = e2l_game_parse(text.data(), text.size(), &game);
  if (status != E2L_OK) throw ApiError{status, path + ":" + e2l_last_error()};
  return Game(game);
}

int RunCompile(const Options& opt) {
  Game source = LoadGame(opt.in);
  e2l_game* normalized = nullptr;
  char* transforms = nullptr;
  Check(e2l_game_normalize(source.get(), &normalized, &transforms));
  Game game(normalized);
  CString applied(transforms);
  if (!opt.quiet) {
    std::cerr << (*applied ? applied.get() : "no transforms applied\n");
  }
  std::string name = std::filesystem::path(opt.in).stem().string();
  char* lud = nullptr;
  Check(e2l_compile(game.get(), name.c_str(), &lud));
  CString text(lud);
  WriteOutput(opt.out, text.get());
  return kExitOk;
}

int RunVerify(const Options& opt) {
  Game game = LoadGame(opt.in);
  const std::string lud = ReadFile(opt.lud);
  char* report = nullptr;
  char* summary = nullptr;
  int all_passed = 0;
  Check(e2l_verify(game.get(), lud.data(), lud.size(), &report, &summary, &all_passed));
  CString records(report);
  CString human(summary);
  std::string out = records.get();
  bool passed = all_passed != 0;
  if (opt.n > 0 && passed) {
    char* stats = nullptr;
    int stats_passed = 0;
    Check(e2l_statistical_check(game.get(), lud.data(), lud.size(), opt.n, ResolveSeed(opt),
                                opt.tolerance, &stats, &stats_passed));
    CString stats_text(stats);
    out += stats_text.get();
    passed = stats_passed != 0;
    if (!opt.quiet) {
      std::cerr << "statistical check over " << opt.n << " playouts: "
                << (stats_passed ? "pass" : "FAIL") << "\n";
    }
  }
  WriteOutput(opt.out, out);
  if (!opt.quiet) std::cerr << human.get();
  return passed ? kExitOk : kExitVerificationFailed;
}

int RunSimulate(const Options& opt) {
  const std::string lud = ReadFile(opt.in);
  char* records = nullptr;
  char* summary = nullptr;
  Check(e2l_simulate(lud.data(), lud.size(), opt.n, ResolveSeed(opt), &records, &summary));
  CString dump(records);
  CString human(summary);
  WriteOutput(opt.out, dump.get());
  if (!opt.quiet) std::cerr << human.get();
  return kExitOk;
}

int RunInfo(const Options& opt) {
  Game game = LoadGame(opt.in);
  char* info = nullptr;
  Check(e2l_game_info(game.get(), &info));
  CString text(info);
  WriteOutput(opt.out, text.get());
  return kExitOk;
}

int RunGen(const Options& opt) {
  e2l_game* raw = nullptr;
  Check(e2l_game_generate(&opt.gen, ResolveSeed(opt), &raw));
  Game game(raw);
  char* text = nullptr;
  Check(e2l_game_serialize(game.get(), &text));
  CString serialized(text);
  WriteOutput(opt.out, serialized.get());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile extensive-form games to Ludii descriptions and check them"};
  app.require_subcommand(1);
  Options opt;
  e2l_generator_defaults(&opt.gen);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "Output file (default: stdout)");
    cmd->add_flag("--quiet", opt.quiet, "Suppress the summary on stderr");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "Seed (default: $EFG2LUDII_SEED, else 0)");
  };

  CLI::App* compile = app.add_subcommand("compile", "Compile a .efg-tree file to a .lud description");
  compile->add_option("--in,input", opt.in, "Game file")->required();
  add_common(compile);

  CLI::App* verify = app.add_subcommand("verify", "Check a .lud description against its game");
  verify->add_option("--in,input", opt.in, "Game file")->required();
  verify->add_option("--lud,description", opt.lud, "Description file")->required();
  verify->add_option("--n", opt.n, "Also run a statistical check with this many playouts");
  verify->add_option("--tolerance", opt.tolerance, "Statistical check bound in standard errors")
      ->check(CLI::PositiveNumber);
  add_seed(verify);
  add_common(verify);

  CLI::App* simulate = app.add_subcommand("simulate", "Seeded playouts of a .lud description");
  simulate->add_option("--in,input", opt.in, "Description file")->required();
  opt.n = 0;
  simulate->add_option("--n", opt.n, "Number of playouts")->default_str("1");
  add_seed(simulate);
  add_common(simulate);

  CLI::App* info = app.add_subcommand("info", "Print statistics of a .efg-tree file");
  info->add_option("--in,input", opt.in, "Game file")->required();
  add_common(info);

  CLI::App* gen = app.add_subcommand("gen", "Generate a random valid .efg-tree file");
  gen->add_option("--max-nodes", opt.gen.max_nodes, "Node budget")->capture_default_str();
  gen->add_option("--branching", opt.gen.max_branching, "Maximum branching factor")
      ->capture_default_str();
  gen->add_option("--chance-rate", opt.gen.chance_rate, "Probability of a chance state")
      ->capture_default_str();
  gen->add_option("--merge-rate", opt.gen.merge_rate, "Information set merge rate")
      ->capture_default_str();
  gen->add_option("--players", opt.gen.players, "Player count (0: random in 1..4)")
      ->capture_default_str();
  gen->add_option("--max-depth", opt.gen.max_depth, "Maximum depth")->capture_default_str();
  add_seed(gen);
  add_common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (compile->parsed()) return RunCompile(opt);
    if (verify->parsed()) return RunVerify(opt);
    if (simulate->parsed()) {
      if (simulate->count("--n") == 0) opt.n = 1;
      return RunSimulate(opt);
    }
    if (info->parsed()) return RunInfo(opt);
    if (gen->parsed()) return RunGen(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.message << "\n";
    return ExitFor(e.status);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}
