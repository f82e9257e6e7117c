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

#ifndef EFG2LUDII_EFG_PARSER_H_
#define EFG2LUDII_EFG_PARSER_H_

#include <string>
#include <string_view>

#include "efg2ludii/efg.h"

namespace efg2ludii {

// Reads the `.efg-tree` format (grammar in docs/efg-tree.ebnf):
//
//   (efg 1 (players 2))
//   (chance 0 (1/3 -> 1) (2/3 -> 2))
//   (decision 1 (mover 1) (children 3 4))
//   (terminal 2 (payoffs 1 -1))
//   (infoset 2 (3 4))
//   ...
//
// The returned game passes ValidateGame; anything else is a ParseError
// carrying the line and column of the offending declaration.
ExtensiveFormGame ParseEfg(std::string_view text);

// Canonical text: nodes by ascending id, non-singleton information sets by
// (player, smallest member). ParseEfg(SerializeEfg(g)) == g.
std::string SerializeEfg(const ExtensiveFormGame& game);

}  // namespace efg2ludii

#endif  // EFG2LUDII_EFG_PARSER_H_
