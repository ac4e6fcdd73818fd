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

#include "sparseip/rational.h"

#include <gtest/gtest.h>

namespace sparseip {
namespace {

TEST(RationalTest, ParsesIntegersAndFractions) {
  EXPECT_EQ(*ParseRational("7"), Rational(7));
  EXPECT_EQ(*ParseRational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(*ParseRational("6/8"), Rational(3, 4));
  EXPECT_EQ(ToString(*ParseRational("6/8")), "3/4");
  EXPECT_EQ(ToString(*ParseRational("4/2")), "2");
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1.5", "1e3", "1/0", "/2", "3/", "a", "+1", "1/-2", " 1", "--1"}) {
    EXPECT_FALSE(ParseRational(bad).has_value()) << bad;
  }
}

TEST(RationalTest, FloorAndCeilOfNegatives) {
  EXPECT_EQ(Floor(Rational(-1, 2)), Integer(-1));
  EXPECT_EQ(Ceil(Rational(-1, 2)), Integer(0));
  EXPECT_EQ(Floor(Rational(7, 3)), Integer(2));
  EXPECT_EQ(Ceil(Rational(7, 3)), Integer(3));
  EXPECT_EQ(Ceil(Rational(3)), Integer(3));
  EXPECT_TRUE(IsInteger(MakeRational(Integer(4), Integer(2))));
  EXPECT_FALSE(IsInteger(Rational(1, 3)));
}

TEST(RationalTest, MakeRationalNormalizesSign) {
  const Rational r = MakeRational(Integer(2), Integer(-4));
  EXPECT_EQ(r, Rational(-1, 2));
  EXPECT_EQ(ToString(r), "-1/2");
}

TEST(UpperBoundTest, InfinityRoundTrips) {
  EXPECT_EQ(ToString(UpperBound::Infinity()), "inf");
  EXPECT_TRUE(ParseUpperBound("inf")->infinite());
  EXPECT_EQ(ParseUpperBound("3")->value(), Rational(3));
  EXPECT_FALSE(ParseUpperBound("infinity").has_value());
  EXPECT_FALSE(UpperBound::Infinity() == UpperBound(3));
}

}  // namespace
}  // namespace sparseip
