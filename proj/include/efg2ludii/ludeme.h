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

#ifndef EFG2LUDII_LUDEME_H_
#define EFG2LUDII_LUDEME_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "efg2ludii/errors.h"

namespace efg2ludii {

// One node of a parenthesised ludeme tree. A term `(head arg...)` keeps its
// head in `text` and its arguments in `children`; an array `{...}` keeps its
// items in `children`; literals keep their spelling in `text`. A non-empty
// `name` marks a named argument such as `to:All` or `by:P1`.
struct Ludeme {
  enum class Kind { kTerm, kArray, kInteger, kDecimal, kString, kSymbol };

  Kind kind = Kind::kSymbol;
  std::string text;
  std::string name;
  std::vector<Ludeme> children;
  // Where the node started in the source; not part of equality.
  SourcePos pos;

  static Ludeme Term(std::string head, std::vector<Ludeme> args = {});
  static Ludeme Array(std::vector<Ludeme> items = {});
  static Ludeme Int(std::int64_t value);
  static Ludeme Integer(std::string digits);
  static Ludeme Dec(std::string literal);
  static Ludeme Str(std::string value);
  static Ludeme Sym(std::string value);
  Ludeme Named(std::string arg_name) &&;

  bool IsTerm(std::string_view head) const {
    return kind == Kind::kTerm && text == head;
  }

  bool operator==(const Ludeme& other) const {
    return kind == other.kind && text == other.text && name == other.name &&
           children == other.children;
  }
};

// Reads exactly one ludeme (plus surrounding whitespace and `//` comments).
// Numbers with a '.' become decimals; other numbers become integers.
Ludeme ReadLudeme(std::string_view text);

// Canonical rendering: two-space indentation, terms that fit stay on one
// line, array items one per line, and the else-branch of an `if` sits at the
// indentation of the `if` itself so long if-chains stay flat. The text ends
// with a newline.
std::string RenderLudeme(const Ludeme& ludeme);

// Token stream used for whitespace-insensitive comparisons.
std::vector<std::string> Tokenize(std::string_view text);

// Number of term nodes with the given head anywhere below (and including)
// `root`.
int CountTerms(const Ludeme& root, std::string_view head);

}  // namespace efg2ludii

#endif  // EFG2LUDII_LUDEME_H_
