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

#include "bpps/bounds.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "bpps/bpp.hpp"
#include "bpps/gen.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace bpps {
namespace {

using testing::Fig1;

Instance SingleClass(std::vector<std::int64_t> weights, std::int64_t s,
                     std::int64_t f, std::int64_t d, std::int64_t r) {
  Instance inst;
  inst.weights = std::move(weights);
  inst.class_of.assign(inst.weights.size(), 0);
  inst.setup_weights = {s};
  inst.setup_costs = {f};
  inst.capacity = d;
  inst.bin_cost = r;
  return inst;
}

TEST(GammaTest, Examples) {
  EXPECT_EQ(gamma(Fig1(10)), (std::vector<std::int64_t>{3, 1}));
  EXPECT_EQ(gamma(gen::worst_case_half(2, 4, 1, 0)), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(gamma(SingleClass({2, 3}, 0, 0, 5, 1)), (std::vector<std::int64_t>{1}));
}

TEST(ZetaTest, NaturalRelaxation) {
  EXPECT_EQ(zeta_lp_n(Fig1(10)), Rational(35));
  EXPECT_EQ(zeta_lp_n(gen::worst_case_unit(5, 1, 0)), Rational(9, 5));
  EXPECT_EQ(zeta_lp_n(SingleClass({5}, 0, 0, 5, 1)), Rational(1));
}

TEST(ZetaTest, MinimumClassesRelaxation) {
  EXPECT_EQ(zeta_lp_dag(Fig1(10)), Rational(127, 3));
  EXPECT_EQ(zeta_lp_dag(gen::worst_case_half(2, 4, 1, 0)), Rational(11, 4));
  const Instance free = SingleClass({3, 4, 5, 2}, 0, 0, 6, 3);
  EXPECT_EQ(zeta_lp_dag(free), zeta_lp_n(free));
}

TEST(KLowerTest, Examples) {
  EXPECT_EQ(k_lower(Fig1(10)), 4);
  EXPECT_EQ(k_lower(gen::worst_case_half(2, 4, 1, 0)), 3);
  EXPECT_EQ(k_lower(SingleClass({3, 3, 4, 2}, 0, 0, 6, 1)), 2);
}

TEST(ZetaTest, MinimumBinsRelaxation) {
  EXPECT_EQ(zeta_lp_ddag(Fig1(10)), Rational(49));
  EXPECT_EQ(zeta_lp_ddag(Fig1(1)), Rational(13));
  const Instance free = SingleClass({3, 4, 5, 2}, 0, 0, 6, 7);
  EXPECT_EQ(zeta_lp_ddag(free), Rational(7 * 3));
}

TEST(ComputeBoundsTest, Fig1Report) {
  const BoundsReport b = compute_bounds(Fig1(10));
  EXPECT_EQ(b.gamma, (std::vector<std::int64_t>{3, 1}));
  EXPECT_EQ(b.k_lower, 4);
  EXPECT_EQ(b.zeta_n, Rational(35));
  EXPECT_EQ(b.zeta_dag, Rational(127, 3));
  EXPECT_EQ(b.zeta_ddag, Rational(49));
}

TEST(FractionalSolutionTest, NaturalVariantOnFig1) {
  const Instance inst = Fig1(10);
  const FractionalSolution fs = fractional_solution(inst, Variant::kN, 8);
  for (int b = 0; b < 8; ++b) {
    EXPECT_EQ(fs.z(b), Rational(3, 8));
    EXPECT_EQ(fs.x(0, b), Rational(1, 8));
    EXPECT_EQ(fs.y(0, b), Rational(1, 8));
    EXPECT_EQ(fs.y(1, b), Rational(1, 8));
  }
  EXPECT_EQ(fs.objective(inst), Rational(35));
  EXPECT_TRUE(verify_fractional(inst, fs).ok());
}

TEST(FractionalSolutionTest, MinimumBinsVariantOnFig1) {
  const Instance inst = Fig1(10);
  FractionalSolution fs = fractional_solution(inst, Variant::kDdag, 8);
  for (int b = 0; b < 8; ++b) EXPECT_EQ(fs.z(b), Rational(4, 8));
  EXPECT_EQ(fs.objective(inst), Rational(49));
  EXPECT_TRUE(verify_fractional(inst, fs).ok());

  fs.set_z(2, Rational(3, 8));
  const ValidationReport report = verify_fractional(inst, fs);
  ASSERT_TRUE(report.has(ViolationKind::kCapacity));
  EXPECT_EQ(report.violations.front().index, 3);
}

TEST(FractionalSolutionTest, NaturalSolutionFailsStrongerRows) {
  const Instance inst = Fig1(10);
  const FractionalSolution fs = fractional_solution(inst, Variant::kN, 8);
  const ValidationReport report = verify_fractional(inst, fs, Variant::kDdag);
  EXPECT_TRUE(report.has(ViolationKind::kMbiRow));
  EXPECT_TRUE(report.has(ViolationKind::kMciRow));
}

TEST(FractionalSolutionTest, UnitGammaCollapsesToNatural) {
  const Instance inst = SingleClass({1, 2, 1}, 1, 2, 5, 3);
  ASSERT_EQ(gamma(inst), (std::vector<std::int64_t>{1}));
  const FractionalSolution n = fractional_solution(inst, Variant::kN, 3);
  const FractionalSolution dag = fractional_solution(inst, Variant::kDag, 3);
  for (int b = 0; b < 3; ++b) {
    EXPECT_EQ(n.z(b), dag.z(b));
    EXPECT_EQ(n.y(0, b), dag.y(0, b));
  }
  EXPECT_EQ(n.objective(inst), dag.objective(inst));
}

TEST(FractionalSolutionTest, RejectsTooFewBins) {
  EXPECT_THROW(fractional_solution(Fig1(10), Variant::kN, 3), PreconditionError);
  EXPECT_NO_THROW(fractional_solution(Fig1(10), Variant::kN, 4));
}

TEST(VerifyFractionalTest, DetectsBoundAndAssignmentViolations) {
  const Instance inst = Fig1(10);
  FractionalSolution fs = fractional_solution(inst, Variant::kDag, 8);
  fs.set_z(0, Rational(3, 2));
  EXPECT_TRUE(verify_fractional(inst, fs).has(ViolationKind::kVariableBound));

  const FractionalSolution wrong(Variant::kN, 8, Rational(1, 9),
                                 {Rational(1, 8), Rational(1, 8)},
                                 std::vector<Rational>(8, Rational(3, 8)));
  EXPECT_TRUE(verify_fractional(inst, wrong).has(ViolationKind::kAssignmentRow));

  const FractionalSolution unlinked(Variant::kN, 8, Rational(1, 8),
                                    {Rational(1, 16), Rational(1, 8)},
                                    std::vector<Rational>(8, Rational(1)));
  EXPECT_TRUE(verify_fractional(inst, unlinked).has(ViolationKind::kLinkingRow));
}

TEST(BoundsPropertyTest, ChainAndOracleAgreement) {
  for (const Instance& inst : testing::RandomSmallInstances(500, 5000)) {
    const BoundsReport b = compute_bounds(inst);
    const oracle::OracleBounds o = oracle::Bounds(inst);
    ASSERT_EQ(b.gamma, o.gamma);
    ASSERT_EQ(b.k_lower, o.k_lower);
    ASSERT_EQ(b.zeta_n, o.zeta_n);
    ASSERT_EQ(b.zeta_dag, o.zeta_dag);
    ASSERT_EQ(b.zeta_ddag, o.zeta_ddag);
    EXPECT_LE(b.zeta_n, b.zeta_dag);
    EXPECT_LE(b.zeta_dag, b.zeta_ddag);
    EXPECT_GE(b.k_lower, *std::max_element(b.gamma.begin(), b.gamma.end()));
    for (auto g : b.gamma) EXPECT_GE(g, 1);
  }
}

TEST(BoundsPropertyTest, SetupFreeDegeneracy) {
  for (Instance inst : testing::RandomSmallInstances(200, 6000)) {
    std::fill(inst.setup_weights.begin(), inst.setup_weights.end(), 0);
    std::fill(inst.setup_costs.begin(), inst.setup_costs.end(), 0);
    EXPECT_EQ(zeta_lp_n(inst), zeta_lp_dag(inst));
    EXPECT_EQ(k_lower(inst), CeilDiv(inst.total_weight(), inst.capacity));
  }
}

TEST(BoundsPropertyTest, FractionalSolutionsVerifyForEveryVariantAndK) {
  for (const Instance& inst : testing::RandomSmallInstances(200, 7000)) {
    const BoundsReport b = compute_bounds(inst);
    for (int k = static_cast<int>(b.k_lower); k <= inst.item_count() + 2; ++k) {
      const FractionalSolution n = fractional_solution(inst, Variant::kN, k);
      const FractionalSolution dag = fractional_solution(inst, Variant::kDag, k);
      const FractionalSolution ddag = fractional_solution(inst, Variant::kDdag, k);
      ASSERT_TRUE(verify_fractional(inst, n).ok());
      ASSERT_TRUE(verify_fractional(inst, dag).ok());
      ASSERT_TRUE(verify_fractional(inst, ddag).ok());
      EXPECT_EQ(n.objective(inst), b.zeta_n);
      EXPECT_EQ(dag.objective(inst), b.zeta_dag);
      EXPECT_EQ(ddag.objective(inst), b.zeta_ddag);
    }
  }
}

// Minimum-classes right-hand side is at least half the exact class packing.
TEST(BoundsPropertyTest, GammaAtLeastHalfOfClassOptimum) {
  for (const Instance& inst : testing::RandomSmallInstances(300, 8000)) {
    const auto g = gamma(inst);
    for (int c = 0; c < inst.class_count(); ++c) {
      std::vector<std::int64_t> weights;
      for (int i : inst.items_of_class(c)) weights.push_back(inst.w(i));
      const int beta = oracle::MinBins(weights, inst.capacity - inst.s(c));
      EXPECT_GE(2 * g[static_cast<std::size_t>(c)], beta);
    }
  }
}

}  // namespace
}  // namespace bpps
