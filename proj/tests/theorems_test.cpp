// Copyright 2026 The roughcms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "roughcms/random.hpp"
#include "roughcms/theorems.hpp"

namespace roughcms {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const EpSequence kXi({}, {"2", "3"});

ControlledSpace Parity(int n) { return BuildSpace(ParityExampleSpec(n)); }

TEST(DiameterBoundTest, AlternatingSequence) {
  const TheoremReport r = CheckDiameterBound(Parity(4), kXi, kInvSqrt2);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  ASSERT_TRUE(r.bound_ratio.has_value());
  // diam{2,3} / (2 * (1/sqrt2) * 2) = 1/4.
  EXPECT_DOUBLE_EQ(*r.bound_ratio, 0.25);
}

TEST(DiameterBoundTest, ConvergentAtZero) {
  const TheoremReport r =
      CheckDiameterBound(Parity(4), EpSequence::Constant("3"), 0);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_FALSE(r.bound_ratio.has_value());
}

TEST(DiameterBoundTest, EmptyLimitSetIsVacuous) {
  const TheoremReport r = CheckDiameterBound(Parity(4), kXi, 0.1);
  EXPECT_EQ(r.verdict, Verdict::kVacuous);
  EXPECT_TRUE(r.passed());
}

TEST(BallSandwichTest, Examples) {
  EXPECT_EQ(CheckBallSandwich(Parity(4), EpSequence::Constant("1"), 0).verdict,
            Verdict::kHolds);
  EXPECT_EQ(CheckBallSandwich(Parity(4), EpSequence({"1", "3"}, {"2"}),
                              kInvSqrt2)
                .verdict,
            Verdict::kHolds);
  EXPECT_EQ(CheckBallSandwich(Parity(4), kXi, 1).verdict,
            Verdict::kNotApplicable);
}

TEST(DerivedSetCheckTest, VacuousOnFiniteSpaces) {
  for (double r : {0.0, kInvSqrt2, 1.0}) {
    const TheoremReport rep = CheckDerivedSet(Parity(6), kXi, r);
    EXPECT_EQ(rep.verdict, Verdict::kVacuous);
    EXPECT_FALSE(rep.note.empty());
  }
}

TEST(RoughImpliesBoundedTest, Examples) {
  EXPECT_EQ(CheckRoughImpliesBounded(Parity(4), kXi, kInvSqrt2).verdict,
            Verdict::kHolds);
  EXPECT_EQ(
      CheckRoughImpliesBounded(Parity(4), EpSequence::Constant("2"), 0).verdict,
      Verdict::kHolds);
  EXPECT_EQ(CheckRoughImpliesBounded(Parity(4), kXi, 0.5).verdict,
            Verdict::kNotApplicable);
}

TEST(BoundedImpliesRoughTest, Examples) {
  const TheoremReport r = CheckBoundedImpliesRough(Parity(4), kXi);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_DOUBLE_EQ(r.params.r, 4 * (kInvSqrt2 + 1));
  const TheoremReport c =
      CheckBoundedImpliesRough(Parity(4), EpSequence::Constant("1"));
  EXPECT_EQ(c.verdict, Verdict::kHolds);
  EXPECT_DOUBLE_EQ(c.params.r, 4.0);
}

TEST(SubsequenceCheckTest, Examples) {
  EXPECT_EQ(CheckSubsequence(Parity(4), kXi, kInvSqrt2, 1, 2).verdict,
            Verdict::kHolds);
  EXPECT_EQ(CheckSubsequence(Parity(4), kXi, kInvSqrt2, 1, 1).verdict,
            Verdict::kHolds);
  // The constant-2 subsequence has LIM = B[2, 1/sqrt2] = {1, 2, 3}.
  const ControlledSpace s = Parity(4);
  EXPECT_EQ(s.labels(RoughLimits(EpSequence::Constant("2"), s, kInvSqrt2)
                         .members),
            (std::vector<std::string>{"1", "2", "3"}));
}

TEST(ShadowingTest, Examples) {
  const ControlledSpace s = Parity(4);
  const EpSequence a = EpSequence::Constant("2");
  EXPECT_EQ(CheckShadowing(s, a, a, 0.1).verdict, Verdict::kHolds);
  // d(2,3) = 1/sqrt2 = r/k with r = sqrt2, k = 2.
  EXPECT_EQ(CheckShadowing(s, a, kXi, 2 * kInvSqrt2).verdict, Verdict::kHolds);
  // Just below: hypothesis fails.
  EXPECT_EQ(CheckShadowing(s, a, kXi, 2 * kInvSqrt2 - 1e-6).verdict,
            Verdict::kNotApplicable);
  EXPECT_EQ(CheckShadowing(s, kXi, a, 1).verdict, Verdict::kNotApplicable);
  EXPECT_THROW(CheckShadowing(s, a, a, 0), DomainError);
}

TEST(LimitSetSequenceTest, Examples) {
  const ControlledSpace s = Parity(4);
  EXPECT_EQ(CheckLimitSetSequence(s, kXi, kInvSqrt2, EpSequence::Constant("3"))
                .verdict,
            Verdict::kHolds);
  EXPECT_EQ(CheckLimitSetSequence(s, kXi, kInvSqrt2,
                                  EpSequence({"2", "3"}, {"2"}))
                .verdict,
            Verdict::kHolds);
  // Probe leaves LIM^r.
  EXPECT_EQ(CheckLimitSetSequence(s, kXi, kInvSqrt2, EpSequence::Constant("4"))
                .verdict,
            Verdict::kNotApplicable);
  // Probe does not converge.
  EXPECT_EQ(CheckLimitSetSequence(s, kXi, kInvSqrt2, kXi).verdict,
            Verdict::kNotApplicable);
}

TEST(ClusterBallTest, Examples) {
  EXPECT_EQ(CheckClusterBall(Parity(4), kXi, kInvSqrt2).verdict,
            Verdict::kHolds);
  EXPECT_EQ(CheckClusterBall(Parity(4), EpSequence::Constant("4"), 0).verdict,
            Verdict::kHolds);
  EXPECT_EQ(CheckClusterBall(Parity(4), kXi, 0).verdict,
            Verdict::kNotApplicable);
}

TEST(RunAllTest, CoversEveryTheoremForEveryR) {
  const ControlledSpace s = Parity(6);
  const std::vector<double> grid = DefaultRGrid(s, kXi);
  // r* = 1/sqrt2, D = 1.
  EXPECT_EQ(grid.size(), 6u);
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_DOUBLE_EQ(grid[2], kInvSqrt2);
  EXPECT_EQ(grid.back(), 2.0);
  const auto reports = RunAll(s, kXi, grid);
  EXPECT_EQ(reports.size(), 1 + 8 * grid.size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << TheoremName(r.id) << " r=" << r.params.r;
    EXPECT_EQ(r.witness.has_value(), r.verdict == Verdict::kViolated);
  }
}

TEST(RunAllTest, RecheckReproducesEveryReport) {
  Rng rng = TrialRng(99, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = UniformInt(rng, 1, 8);
    const ControlledSpace s = BuildSpace(RandomSpaceSpec(rng, n));
    const EpSequence seq = RandomSequence(rng, n, 2, 3);
    RunOptions options{UniformInt(rng, 1, 3), UniformInt(rng, 1, 3), rng()};
    for (const auto& r : RunAll(s, seq, DefaultRGrid(s, seq), options)) {
      const TheoremReport again = Recheck(r);
      EXPECT_EQ(again.id, r.id);
      EXPECT_EQ(again.verdict, r.verdict);
      EXPECT_EQ(again.bound_ratio, r.bound_ratio);
    }
  }
}

TEST(RunAllTest, ShadowAtZeroIsNotApplicable) {
  const auto reports =
      RunAll(Parity(4), EpSequence::Constant("2"), std::vector<double>{0.0});
  int shadow = 0;
  for (const auto& r : reports) {
    if (r.id != TheoremId::kShadowing) continue;
    ++shadow;
    EXPECT_EQ(r.verdict, Verdict::kNotApplicable);
  }
  EXPECT_EQ(shadow, 1);
}

TEST(ShadowPartnerTest, StaysWithinRadius) {
  const ControlledSpace s = Parity(8);
  const EpSequence a({"5"}, {"4"});
  for (std::uint64_t salt = 0; salt < 5; ++salt) {
    const EpSequence b = ShadowPartner(s, a, 1.5, salt);
    for (const auto& v : b.cycle()) {
      EXPECT_LE(s.distance(s.index_of(v), s.index_of("4")), 1.5 / s.k() + 1e-12);
    }
    EXPECT_EQ(CheckShadowing(s, a, b, 1.5).verdict, Verdict::kHolds);
  }
}

}  // namespace
}  // namespace roughcms
