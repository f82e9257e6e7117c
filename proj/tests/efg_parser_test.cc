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

#include "doctest.h"
#include "efg2ludii/efg_parser.h"
#include "efg2ludii/errors.h"
#include "efg2ludii/generator.h"
#include "support.h"

namespace efg2ludii {
namespace {

// Returns "line:column: message" of the ParseError thrown for `text`.
std::string ErrorOf(const std::string& text) {
  try {
    ParseEfg(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

constexpr char kHeader[] = "(efg 1 (players 2))\n";

TEST_CASE("the sample file parses to the hand-built game") {
  CHECK(ParseEfg(testing::kSmallImperfectEfg) == testing::SmallImperfectGame());
}

TEST_CASE("serialization is canonical") {
  const std::string text = SerializeEfg(testing::SmallImperfectGame());
  CHECK(text ==
        "(efg 1 (players 2))\n"
        "(chance 0 (1/3 -> 1) (2/3 -> 2))\n"
        "(decision 1 (mover 1) (children 3 4))\n"
        "(decision 2 (mover 1) (children 5 6))\n"
        "(decision 3 (mover 2) (children 7 8))\n"
        "(terminal 4 (payoffs 1 -1))\n"
        "(decision 5 (mover 2) (children 9 10))\n"
        "(terminal 6 (payoffs -1 1))\n"
        "(terminal 7 (payoffs 2 -2))\n"
        "(terminal 8 (payoffs 0 0))\n"
        "(terminal 9 (payoffs 1.5 -1.5))\n"
        "(terminal 10 (payoffs 0 0))\n"
        "(infoset 1 (1 2))\n"
        "(infoset 2 (3 5))\n");
  CHECK(SerializeEfg(ParseEfg(text)) == text);
}

TEST_CASE("declaration order does not matter") {
  const std::string shuffled = std::string(kHeader) +
                               "(infoset 1 (2 1))\n"
                               "(terminal 2 (payoffs 0 0))\n"
                               "(decision 1 (mover 1) (children 3))\n"
                               "(terminal 3 (payoffs 1 1))\n"
                               "(chance 0 (2/4 -> 1) (1/2 -> 2))\n";
  ExtensiveFormGame g = ParseEfg(shuffled);
  CHECK(g.node(0).chance_probs[0] == Rational(1, 2));
  CHECK(g.InformationSet(1, 1) == std::vector<StateId>{1, 2});
}

TEST_CASE("parse errors name the position") {
  CHECK(ErrorOf("") == "1:1: empty document, expected '(efg 1 ...)' header");
  CHECK(ErrorOf(std::string(kHeader) + "(foo 0)") == "2:2: unknown keyword 'foo'");
  CHECK(ErrorOf(std::string(kHeader) + "(terminal 0 (payoffs 1 1))\n(terminal 0 (payoffs 1 1))") ==
        "3:11: duplicate state id 0");
  CHECK(ErrorOf(std::string(kHeader) + "(decision 0 (mover 1) (children 1 7))\n(terminal 1 (payoffs 0 0))") ==
        "2:35: reference to undeclared state 7");
  CHECK(ErrorOf(std::string(kHeader) + "(chance 0 (1/2 1))").find(
            "malformed chance distribution at state 0") != std::string::npos);
  CHECK(ErrorOf(std::string(kHeader) + "(chance 0 (x -> 1))").find(
            "malformed chance distribution") != std::string::npos);
  CHECK(ErrorOf(std::string(kHeader) + "(terminal 0 (payoffs 1))").find("has 1 payoffs, expected 2") !=
        std::string::npos);
  CHECK(ErrorOf(std::string(kHeader) + "(terminal 0 (payoffs 1 1e3))").find("malformed payoff literal") !=
        std::string::npos);
  CHECK(ErrorOf("(efg 2 (players 2))").find("unsupported format version") != std::string::npos);
  CHECK(ErrorOf(std::string(kHeader) + "(terminal 0 (payoffs 1 1))\n(terminal 2 (payoffs 1 1))")
            .find("contiguous") != std::string::npos);
  CHECK(ErrorOf(std::string(kHeader) + "(decision 0 (mover 3) (children 1))").find("mover") !=
        std::string::npos);
  CHECK(ErrorOf(std::string(kHeader) + "(terminal 0 (payoffs 1 1)") .find("expected ')'") !=
        std::string::npos);
}

TEST_CASE("invalid games are reported at the offending declaration") {
  const std::string text = std::string(kHeader) +
                           "(chance 0 (1/2 -> 1) (1/3 -> 2))\n"
                           "(terminal 1 (payoffs 0 0))\n"
                           "(terminal 2 (payoffs 0 0))\n";
  const std::string error = ErrorOf(text);
  CHECK(error.rfind("2:1: ", 0) == 0);
  CHECK(error.find("sums to 5/6") != std::string::npos);

  const std::string cyclic = std::string(kHeader) +
                             "(decision 0 (mover 1) (children 1 2))\n"
                             "(decision 1 (mover 1) (children 2))\n"
                             "(terminal 2 (payoffs 0 0))\n";
  CHECK(ErrorOf(cyclic).find("not a tree") != std::string::npos);
}

TEST_CASE("generated games round-trip through text") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    ExtensiveFormGame g = GenerateGame({}, seed);
    CAPTURE(seed);
    CHECK(ParseEfg(SerializeEfg(g)) == g);
  }
}

}  // namespace
}  // namespace efg2ludii
