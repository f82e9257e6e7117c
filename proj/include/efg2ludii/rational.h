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

#ifndef EFG2LUDII_RATIONAL_H_
#define EFG2LUDII_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace efg2ludii {

using BigInt = boost::multiprecision::cpp_int;

BigInt ParseBigInt(std::string_view digits);

// Exact rational number, always kept in lowest terms with a positive
// denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  // Accepts "n/d" or a bare integer "n" (shorthand for n/1).
  static Rational Parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool IsZero() const { return num_ == 0; }
  bool IsPositive() const { return num_ > 0; }
  double ToDouble() const;

  // Always "num/den", also for integers.
  std::string ToString() const;

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;
  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }

  bool operator==(const Rational& other) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  BigInt num_;
  BigInt den_;
};

Rational Sum(std::span<const Rational> values);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace efg2ludii

#endif  // EFG2LUDII_RATIONAL_H_
