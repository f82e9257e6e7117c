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

#ifndef EFG2LUDII_ERRORS_H_
#define EFG2LUDII_ERRORS_H_

#include <stdexcept>
#include <string>

namespace efg2ludii {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A 1-based line/column position in a source text. Offset is 0-based.
struct SourcePos {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
};

std::string ToString(const SourcePos& pos);

// Raised by both text front ends (.efg-tree and .lud).
class ParseError : public Error {
 public:
  ParseError(const SourcePos& pos, const std::string& message);

  const SourcePos& pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

// A game violates a precondition of the requested operation.
class InvalidGameError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An interpreter effect could not be applied (occupied target, empty source).
class EffectError : public Error {
 public:
  using Error::Error;
};

// Internal invariant broken; indicates a bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace efg2ludii

#endif  // EFG2LUDII_ERRORS_H_
