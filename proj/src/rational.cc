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

#include "efg2ludii/rational.h"

#include "efg2ludii/errors.h"

namespace efg2ludii {

BigInt ParseBigInt(std::string_view digits) {
  std::size_t i = 0;
  bool negative = false;
  if (!digits.empty() && digits[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i == digits.size()) throw ArgumentError("empty integer literal");
  BigInt value = 0;
  for (; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9') {
      throw ArgumentError("malformed integer literal '" +
                          std::string(digits) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw ArgumentError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseBigInt(text), 1);
  BigInt den = ParseBigInt(text.substr(slash + 1));
  if (den <= 0) {
    throw ArgumentError("rational '" + std::string(text) +
                        "' needs a positive denominator");
  }
  return Rational(ParseBigInt(text.substr(0, slash)), den);
}

double Rational::ToDouble() const {
  return static_cast<double>(
      boost::multiprecision::cpp_rational(num_, den_));
}

std::string Rational::ToString() const {
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return Rational(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(num_ * other.num_, den_ * other.den_);
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) throw ArgumentError("division by zero rational");
  return Rational(num_ * other.den_, den_ * other.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  BigInt lhs = num_ * other.den_;
  BigInt rhs = other.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Sum(std::span<const Rational> values) {
  Rational total;
  for (const Rational& v : values) total += v;
  return total;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace efg2ludii
