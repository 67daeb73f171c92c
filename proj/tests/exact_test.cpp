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

#include "bpps/exact.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "bpps/bounds.hpp"
#include "bpps/cha.hpp"
#include "bpps/gen.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace bpps {
namespace {

using testing::Fig1;

TEST(BruteForceTest, Fig1) {
  const ExactResult r10 = brute_force(Fig1(10));
  EXPECT_EQ(r10.value, 60);
  EXPECT_EQ(r10.status, SolveStatus::kOptimal);
  EXPECT_EQ(solution_cost(Fig1(10), r10.solution).total, 60);
  EXPECT_EQ(brute_force(Fig1(1)).value, 16);
}

TEST(BruteForceTest, UnitFamilyUsesOneBinPerItem) {
  const ExactResult r = brute_force(gen::worst_case_unit(4, 1, 0));
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.solution.bin_count(), 4);
}

TEST(BruteForceTest, LexicographicallySmallestOptimum) {
  // Items 1 and 2 can share a bin; both singleton layouts cost more.
  Instance inst;
  inst.weights = {1, 1, 1};
  inst.class_of = {0, 0, 0};
  inst.setup_weights = {1};
  inst.setup_costs = {0};
  inst.capacity = 3;
  inst.bin_cost = 1;
  const ExactResult r = brute_force(inst);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.solution.bins, (std::vector<std::vector<int>>{{0, 1}, {2}}));
}

TEST(BruteForceTest, SizeLimit) {
  const Instance big = gen::worst_case_unit(13, 1, 0);
  EXPECT_THROW(brute_force(big), SizeLimitError);
  EXPECT_NO_THROW(brute_force(gen::worst_case_unit(12, 1, 0)));
}

TEST(BranchAndBoundTest, Fig1) {
  EXPECT_EQ(branch_and_bound(Fig1(10)).value, 60);
  EXPECT_EQ(branch_and_bound(Fig1(1)).value, 16);
}

TEST(BranchAndBoundTest, HalfFamily) {
  const Instance inst = gen::worst_case_half(2, 4, 1, 0);
  EXPECT_EQ(branch_and_bound(inst).value, 4);
  EXPECT_EQ(brute_force(inst).value, 4);
}

TEST(BranchAndBoundTest, NodeLimitKeepsIncumbentAndBound) {
  const ExactResult r = branch_and_bound(Fig1(10), {1, 60.0});
  EXPECT_EQ(r.status, SolveStatus::kLimitReached);
  EXPECT_EQ(r.value, 61);
  EXPECT_EQ(r.lower_bound, 49);
  EXPECT_TRUE(check_feasible(Fig1(10), r.solution).ok());
}

TEST(BranchAndBoundTest, RootBoundIsMinimumBinsRelaxation) {
  EXPECT_EQ(root_lower_bound(Fig1(10)), 49);
  for (const Instance& inst : testing::RandomSmallInstances(300, 12000)) {
    EXPECT_EQ(Rational(root_lower_bound(inst)), zeta_lp_ddag(inst));
  }
}

TEST(BranchAndBoundTest, ModerateInstanceSolves) {
  gen::GeneratorConfig cfg;
  cfg.n = 14;
  cfg.m = 3;
  cfg.d = 100;
  cfg.free_form = true;
  cfg.seed = 5;
  const Instance inst = gen::generate(cfg);
  const ExactResult r = branch_and_bound(inst);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(solution_cost(inst, r.solution).total, r.value);
  EXPECT_GE(Rational(r.value), zeta_lp_ddag(inst));
}

// Oracle equivalence plus the structural facts every optimum must satisfy.
TEST(ExactPropertyTest, AgreesWithOraclesAndBounds) {
  for (const Instance& inst : testing::RandomSmallInstances(300, 13000)) {
    const oracle::OracleOptimum o = oracle::SubsetDpOptimum(inst);
    const ExactResult bf = brute_force(inst);
    const ExactResult bb = branch_and_bound(inst);
    ASSERT_EQ(bf.value, o.cost);
    ASSERT_EQ(bb.value, o.cost);
    ASSERT_EQ(bb.status, SolveStatus::kOptimal);
    EXPECT_EQ(solution_cost(inst, bb.solution).total, bb.value);
    EXPECT_EQ(solution_cost(inst, bf.solution).total, bf.value);

    const BoundsReport b = compute_bounds(inst);
    const Rational psi(o.cost);
    EXPECT_LE(b.zeta_ddag, psi);
    EXPECT_GT(Rational(2) * b.zeta_dag, psi);
    EXPECT_GT(Rational(2) * b.zeta_ddag, psi);

    for (const Solution* sol : {&bf.solution, &bb.solution}) {
      EXPECT_GE(sol->bin_count(), b.k_lower);
      EXPECT_LE(sol->bin_count(), k_upper(inst, BppMode::kExact));
      EXPECT_LE(sol->bin_count(), k_upper(inst, BppMode::kHeuristic));
      std::vector<std::int64_t> active(static_cast<std::size_t>(inst.class_count()), 0);
      for (const auto& bin : sol->bins) {
        for (int c : active_classes(inst, bin)) ++active[static_cast<std::size_t>(c)];
      }
      for (int c = 0; c < inst.class_count(); ++c) {
        EXPECT_GE(active[static_cast<std::size_t>(c)], b.gamma[static_cast<std::size_t>(c)]);
      }
    }
  }
}

}  // namespace
}  // namespace bpps
