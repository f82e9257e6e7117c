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

#include "efg2ludii/decimal.h"

#include <algorithm>
#include <cstdlib>

#include "efg2ludii/errors.h"

namespace efg2ludii {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Compares two non-negative magnitudes.
std::strong_ordering CompareMagnitude(const Decimal& a, const Decimal& b) {
  const std::string& ai = a.integer_digits();
  const std::string& bi = b.integer_digits();
  if (ai.size() != bi.size()) return ai.size() <=> bi.size();
  if (int c = ai.compare(bi); c != 0) return c <=> 0;
  std::string af = a.fraction_digits();
  std::string bf = b.fraction_digits();
  std::size_t n = std::max(af.size(), bf.size());
  af.resize(n, '0');
  bf.resize(n, '0');
  return af.compare(bf) <=> 0;
}

}  // namespace

bool Decimal::IsLiteral(std::string_view text) {
  if (!text.empty() && text[0] == '-') text.remove_prefix(1);
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return AllDigits(text);
  return AllDigits(text.substr(0, dot)) && AllDigits(text.substr(dot + 1));
}

Decimal Decimal::Parse(std::string_view text) {
  if (!IsLiteral(text)) {
    throw ArgumentError("malformed decimal literal '" + std::string(text) +
                        "'");
  }
  Decimal d;
  d.negative_ = text[0] == '-';
  if (d.negative_) text.remove_prefix(1);
  auto dot = text.find('.');
  std::string_view ip = text.substr(0, dot);
  std::string_view fp =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  while (ip.size() > 1 && ip[0] == '0') ip.remove_prefix(1);
  while (!fp.empty() && fp.back() == '0') fp.remove_suffix(1);
  d.integer_ = std::string(ip);
  d.fraction_ = std::string(fp);
  if (d.integer_ == "0" && d.fraction_.empty()) d.negative_ = false;
  return d;
}

std::string Decimal::ToString() const {
  std::string out = negative_ ? "-" : "";
  out += integer_;
  if (!fraction_.empty()) out += "." + fraction_;
  return out;
}

double Decimal::ToDouble() const { return std::strtod(ToString().c_str(), nullptr); }

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
  if (negative_ != other.negative_) {
    return negative_ ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  std::strong_ordering m = CompareMagnitude(*this, other);
  if (!negative_) return m;
  return 0 <=> m;
}

std::ostream& operator<<(std::ostream& os, const Decimal& d) {
  return os << d.ToString();
}

}  // namespace efg2ludii
