// Copyright 2026 The sparseip Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPARSEIP_RATIONAL_H_
#define SPARSEIP_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sparseip {

// Exact fractions. mpq_class keeps every result in lowest terms with a
// positive denominator; values built from raw parts must go through
// MakeRational so the same holds.
using Rational = mpq_class;
using Integer = mpz_class;

Rational MakeRational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with an optional leading '-'; q must be nonzero.
// Decimal and exponent notation are rejected.
std::optional<Rational> ParseRational(std::string_view text);

// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string ToString(const Rational& value);
std::string ToString(const Integer& value);

bool IsInteger(const Rational& value);
Integer Floor(const Rational& value);
Integer Ceil(const Rational& value);

// Upper bound that is either a finite rational or +infinity. Used for the
// multiplicity vector d and for LP variable bounds.
class UpperBound {
 public:
  UpperBound() : value_(Rational(0)) {}
  UpperBound(const Rational& value) : value_(value) {}  // NOLINT
  UpperBound(int value) : value_(Rational(value)) {}    // NOLINT
  static UpperBound Infinity() {
    UpperBound b;
    b.value_.reset();
    return b;
  }

  bool finite() const { return value_.has_value(); }
  bool infinite() const { return !value_.has_value(); }
  // Requires finite().
  const Rational& value() const { return *value_; }

  friend bool operator==(const UpperBound& a, const UpperBound& b) {
    return a.value_ == b.value_;
  }

 private:
  std::optional<Rational> value_;
};

// "inf" or a rational string.
std::string ToString(const UpperBound& bound);
std::optional<UpperBound> ParseUpperBound(std::string_view text);

}  // namespace sparseip

#endif  // SPARSEIP_RATIONAL_H_
