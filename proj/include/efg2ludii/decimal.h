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

#ifndef EFG2LUDII_DECIMAL_H_
#define EFG2LUDII_DECIMAL_H_

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace efg2ludii {

// Exact decimal literal used for payoffs. Stored in canonical form: no
// leading zeros in the integer part, no trailing zeros in the fraction and
// no negative zero. "0.5", "-1" and "2020" keep their spelling.
class Decimal {
 public:
  Decimal() : integer_("0") {}
  static Decimal Parse(std::string_view text);
  static bool IsLiteral(std::string_view text);

  bool negative() const { return negative_; }
  const std::string& integer_digits() const { return integer_; }
  const std::string& fraction_digits() const { return fraction_; }

  std::string ToString() const;
  double ToDouble() const;

  bool operator==(const Decimal& other) const = default;
  std::strong_ordering operator<=>(const Decimal& other) const;

 private:
  bool negative_ = false;
  std::string integer_;
  std::string fraction_;
};

std::ostream& operator<<(std::ostream& os, const Decimal& d);

}  // namespace efg2ludii

#endif  // EFG2LUDII_DECIMAL_H_
