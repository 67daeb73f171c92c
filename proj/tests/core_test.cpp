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

#include "bpps/core.hpp"

#include <gtest/gtest.h>

#include <cstdint>

#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

namespace bpps {
namespace {

using testing::Bins1;
using testing::Fig1;

TEST(ValidateInstanceTest, Fig1IsValid) {
  EXPECT_TRUE(validate_instance(Fig1(10)).ok());
}

TEST(ValidateInstanceTest, ItemSetupOverflowOnItemOne) {
  Instance inst = Fig1(10);
  inst.setup_weights[0] = 4;
  const ValidationReport report = validate_instance(inst);
  ASSERT_FALSE(report.ok());
  ASSERT_TRUE(report.has(ViolationKind::kItemSetupOverflow));
  EXPECT_EQ(report.violations.front().kind, ViolationKind::kItemSetupOverflow);
  EXPECT_EQ(report.violations.front().index, 1);
}

TEST(ValidateInstanceTest, TrivialInstanceFlagged) {
  Instance inst;
  inst.weights = {1, 1};
  inst.class_of = {0, 0};
  inst.setup_weights = {0};
  inst.setup_costs = {0};
  inst.capacity = 3;
  inst.bin_cost = 1;
  const ValidationReport report = validate_instance(inst);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.has(ViolationKind::kTrivialInstance));
  EXPECT_TRUE(report.ok_except_trivial());
  EXPECT_THROW(require_valid(inst), TrivialInstanceError);
  EXPECT_NO_THROW(require_valid(inst, /*allow_trivial=*/true));
}

TEST(ValidateInstanceTest, StructuralProblemsReported) {
  Instance inst = Fig1(10);
  inst.class_of[7] = 5;
  EXPECT_TRUE(validate_instance(inst).has(ViolationKind::kClassOutOfRange));

  inst = Fig1(10);
  inst.setup_weights.push_back(0);
  inst.setup_costs.push_back(0);
  EXPECT_TRUE(validate_instance(inst).has(ViolationKind::kEmptyClass));

  inst = Fig1(10);
  inst.weights[0] = 0;
  EXPECT_TRUE(validate_instance(inst).has(ViolationKind::kNonPositive));

  inst = Fig1(10);
  inst.setup_costs[1] = -1;
  EXPECT_TRUE(validate_instance(inst).has(ViolationKind::kNegative));

  inst = Fig1(10);
  inst.capacity = kMaxInputValue + 1;
  EXPECT_TRUE(validate_instance(inst).has(ViolationKind::kValueTooLarge));

  inst = Fig1(10);
  inst.class_of.pop_back();
  EXPECT_TRUE(validate_instance(inst).has(ViolationKind::kSizeMismatch));
  EXPECT_THROW(require_valid(inst), PreconditionError);
}

TEST(SolutionCostTest, Fig1Optima) {
  const CostBreakdown c10 =
      solution_cost(Fig1(10), Bins1({{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
  EXPECT_EQ(c10.total, 60);
  EXPECT_EQ(c10.bin_cost_total, 40);
  EXPECT_EQ(c10.setup_cost_total, 20);
  EXPECT_EQ(solution_cost(Fig1(1), Bins1({{1}, {2}, {3}, {4}, {5, 6, 7, 8}})).total,
            16);
}

TEST(SolutionCostTest, SingleItemAlone) {
  Instance inst;
  inst.weights = {4};
  inst.class_of = {0};
  inst.setup_weights = {3};
  inst.setup_costs = {7};
  inst.capacity = 7;
  inst.bin_cost = 5;
  EXPECT_EQ(solution_cost(inst, Bins1({{1}})).total, 5 + 7);
}

TEST(SolutionCostTest, InfeasibleThrows) {
  EXPECT_THROW(solution_cost(Fig1(10), Bins1({{1, 2}, {3, 4, 5, 6, 7, 8}})),
               InfeasibleError);
}

TEST(CheckFeasibleTest, BinLoads) {
  const Instance inst = Fig1(10);
  EXPECT_EQ(bin_load(inst, {0, 4}), 6);
  EXPECT_EQ(bin_load(inst, {0, 1}), 7);
  const ValidationReport over =
      check_feasible(inst, Bins1({{1, 2}, {3, 5}, {4, 6}, {7, 8}}));
  ASSERT_TRUE(over.has(ViolationKind::kCapacity));
  EXPECT_EQ(over.violations.front().index, 1);
  EXPECT_EQ(over.violations.front().measured, "load 7");
}

TEST(CheckFeasibleTest, PartitionViolations) {
  const Instance inst = Fig1(10);
  const ValidationReport dup =
      check_feasible(inst, Bins1({{1, 5}, {2, 6, 3}, {3, 7}, {4, 8}}));
  EXPECT_TRUE(dup.has(ViolationKind::kItemDuplicated));
  const ValidationReport missing = check_feasible(inst, Bins1({{1, 5}, {2, 6}, {4, 8}}));
  EXPECT_TRUE(missing.has(ViolationKind::kItemMissing));
  EXPECT_TRUE(check_feasible(inst, Bins1({{1, 5}, {}, {2, 6}, {3, 7}, {4, 8}}))
                  .has(ViolationKind::kEmptyBin));
  EXPECT_TRUE(check_feasible(inst, Bins1({{1, 5}, {2, 6}, {3, 7}, {4, 8, 9}}))
                  .has(ViolationKind::kItemOutOfRange));
}

TEST(CheckedArithmeticTest, OverflowThrows) {
  EXPECT_THROW(CheckedMul(std::int64_t{1} << 40, std::int64_t{1} << 40),
               std::overflow_error);
  EXPECT_THROW(CheckedAdd(INT64_MAX, 1), std::overflow_error);
  EXPECT_EQ(CeilDiv(20, 6), 4);
  EXPECT_EQ(CeilDiv(18, 6), 3);
  EXPECT_EQ(CeilDiv(0, 6), 0);
}

// Singleton bins are always feasible; merging two bins whose merged load fits
// never raises the cost; every feasible cost is at least r.
TEST(CorePropertyTest, SingletonsAndMerging) {
  for (const Instance& inst : testing::RandomSmallInstances(300, 1000)) {
    Solution singles;
    for (int i = 0; i < inst.item_count(); ++i) singles.bins.push_back({i});
    ASSERT_TRUE(check_feasible(inst, singles).ok());
    EXPECT_GE(solution_cost(inst, singles).total, inst.bin_cost);
    for (int a = 0; a < singles.bin_count(); ++a) {
      for (int b = a + 1; b < singles.bin_count(); ++b) {
        std::vector<int> merged = singles.bins[static_cast<std::size_t>(a)];
        merged.push_back(b);
        if (bin_load(inst, merged) > inst.capacity) continue;
        Solution next;
        for (int k = 0; k < singles.bin_count(); ++k) {
          if (k == a) {
            next.bins.push_back(merged);
          } else if (k != b) {
            next.bins.push_back(singles.bins[static_cast<std::size_t>(k)]);
          }
        }
        ASSERT_TRUE(check_feasible(inst, next).ok());
        EXPECT_LE(solution_cost(inst, next).total, solution_cost(inst, singles).total);
      }
    }
  }
}

}  // namespace
}  // namespace bpps
