// Copyright 2026 The bpps Authors
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

#include "bpps/rational.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "bpps/random.hpp"

namespace bpps {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  const Rational a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(0, 7).den(), 1);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(Rational(10, 6) * Rational(18) + Rational(5), Rational(35));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(RationalTest, FloorCeil) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(RationalTest, Rendering) {
  EXPECT_EQ(Rational(127, 3).str(), "127/3");
  EXPECT_EQ(Rational(35).str(), "35");
  EXPECT_EQ(Rational(127, 3).decimal(2), "42.33");
  EXPECT_EQ(Rational(55, 3).decimal(2), "18.33");
  EXPECT_EQ(Rational(1, 8).decimal(2), "0.13");
  EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
  EXPECT_EQ(Rational(39, 20).decimal(9), "1.950000000");
  EXPECT_EQ(Rational(2, 3).decimal(0), "1");
}

TEST(RationalTest, ParseRoundTrip) {
  for (const Rational r : {Rational(127, 3), Rational(-5, 7), Rational(0), Rational(42)}) {
    EXPECT_EQ(Rational::Parse(r.str()), r);
  }
  EXPECT_THROW(Rational::Parse("1/0"), std::exception);
  EXPECT_THROW(Rational::Parse("abc"), std::exception);
}

TEST(RationalTest, OverflowIsDetected) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * big, std::overflow_error);
}

// Field axioms on seeded random operands.
TEST(RationalTest, PropertyFieldIdentities) {
  RandomStream rng(20260101);
  for (int t = 0; t < 2000; ++t) {
    const Rational a(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
    const Rational b(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
    const Rational c(rng.uniform(-1000, 1000), rng.uniform(1, 1000));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (b != Rational(0)) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_LE(Rational(a.floor()), a);
    EXPECT_GE(Rational(a.ceil()), a);
    EXPECT_LT(a - Rational(1), Rational(a.floor()));
  }
}

}  // namespace
}  // namespace bpps
