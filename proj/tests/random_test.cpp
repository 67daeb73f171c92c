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

#include "bpps/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace bpps {
namespace {

TEST(RandomTest, SplitMixKnownValue) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(SplitMix64(0), 0xe220a8397b1dcdafULL);
}

TEST(RandomTest, SameSeedSameStream) {
  RandomStream a(7);
  RandomStream b(7);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
}

TEST(RandomTest, DifferentSeedsDiffer) {
  RandomStream a(7);
  RandomStream b(8);
  int same = 0;
  for (int k = 0; k < 100; ++k) same += a.next() == b.next();
  EXPECT_EQ(same, 0);
}

TEST(RandomTest, UniformStaysInRangeAndCoversIt) {
  RandomStream rng(1);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 7000; ++k) {
    const auto v = rng.uniform(3, 9);
    ASSERT_GE(v, 3);
    ASSERT_LE(v, 9);
    ++hits[static_cast<std::size_t>(v - 3)];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.uniform(5, 5), 5);
  EXPECT_THROW(rng.uniform(2, 1), std::invalid_argument);
}

TEST(RandomTest, ShuffleIsPermutationAndDeterministic) {
  std::vector<int> a(20);
  std::iota(a.begin(), a.end(), 0);
  std::vector<int> b = a;
  RandomStream r1(99);
  RandomStream r2(99);
  r1.shuffle(a);
  r2.shuffle(b);
  EXPECT_EQ(a, b);
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(20);
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_EQ(sorted, identity);
  EXPECT_NE(a, identity);
}

}  // namespace
}  // namespace bpps
