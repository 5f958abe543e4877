// Copyright 2026 The Authors.
//
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

#include "matroid_forge/uniform_ops.h"

#include "gtest/gtest.h"
#include "matroid_forge/enumerate.h"
#include "matroid_forge/errors.h"
#include "matroid_forge/zoo.h"
#include "tests/test_util.h"

namespace matroid_forge {
namespace {

using ::matroid_forge::testing::ParallelPair;
using ::matroid_forge::testing::Triangle;
using Side = BaseExchange::Side;

TEST(ClassifyUniformTest, Examples) {
  const UniformClass u52 = ClassifyUniform(*MakeUniform(ElementSet::Range(5), 2));
  EXPECT_EQ(u52.kind, UniformClass::Kind::kUniformRank);
  EXPECT_EQ(u52.rank, 2);

  const UniformClass free = ClassifyUniform(*MakeFree(ElementSet::Range(3)));
  EXPECT_EQ(free.kind, UniformClass::Kind::kFree);
  EXPECT_EQ(free.rank, 3);

  const UniformClass pair = ClassifyUniform(*ParallelPair());
  EXPECT_EQ(pair.kind, UniformClass::Kind::kNotUniform);
  EXPECT_EQ(pair.neither, (ElementSet{0, 1}));
  ASSERT_TRUE(pair.exchange.has_value());
  EXPECT_NE(pair.ToString().find("not uniform"), std::string::npos);

  EXPECT_EQ(ClassifyUniform(*Triangle()).kind,
            UniformClass::Kind::kUniformRank);
}

TEST(ClassifyUniformTest, AgreesWithBruteForceOnAllSmallMatroids) {
  // Oracle: uniform iff every set of size r is independent.
  for (int n = 0; n <= 6; ++n) {
    for (const SmallMatroid& s : EnumerateLabeledMatroids(n)) {
      const auto m = s.ToExplicit();
      const int r = s.Rank((1u << n) - 1);
      bool uniform = true;
      for (uint32_t x = 0; x < (1u << n); ++x) {
        if (std::popcount(x) == r && !s.IsIndependent(x)) uniform = false;
      }
      const UniformClass c = ClassifyUniform(*m);
      ASSERT_EQ(c.kind != UniformClass::Kind::kNotUniform, uniform);
      if (!uniform) {
        EXPECT_EQ(IndependentOrSpanning(*m, c.neither), SubsetKind::kNeither);
        ASSERT_TRUE(c.exchange.has_value());
        const ExchangeViolation& v = *c.exchange;
        EXPECT_TRUE(m->IsIndependent(v.independent));
        EXPECT_TRUE(v.independent.Contains(v.removed));
        EXPECT_FALSE(v.independent.Contains(v.added));
        EXPECT_FALSE(
            m->IsIndependent(v.independent.Without(v.removed).With(v.added)));
      } else {
        EXPECT_EQ(c.rank, r);
        EXPECT_FALSE(FindExchangeViolation(*m).has_value());
      }
    }
  }
}

TEST(ClassifyUniformTest, Capacity) {
  EXPECT_THROW(ClassifyUniform(*MakeFree(ElementSet::Range(17))), CapacityError);
  EXPECT_NO_THROW(ClassifyUniform(*MakeFree(ElementSet::Range(17)), 17));
}

TEST(IndependentOrSpanningTest, Examples) {
  const auto pair = ParallelPair();
  EXPECT_EQ(IndependentOrSpanning(*pair, {0, 2}), SubsetKind::kIndependent);
  EXPECT_EQ(IndependentOrSpanning(*pair, {0, 1, 2}), SubsetKind::kSpanning);
  EXPECT_EQ(IndependentOrSpanning(*pair, {0, 1}), SubsetKind::kNeither);
  EXPECT_EQ(IndependentOrSpanning(*pair, {}), SubsetKind::kIndependent);
  EXPECT_STREQ(SubsetKindName(SubsetKind::kNeither), "neither");
}

TEST(BaseExchangeTest, Examples) {
  const ElementSet e3 = ElementSet::Range(3);
  EXPECT_EQ(BaseExchangeWithUniform(*MakeFree(e3), *MakeUniform(e3, 1)),
            (BaseExchange{Side::kMIndependentBaseOfU, {0}}));
  EXPECT_EQ(BaseExchangeWithUniform(*MakeUniform(e3, 1), *MakeFree(e3)),
            (BaseExchange{Side::kUIndependentBaseOfM, {0}}));
  EXPECT_EQ(BaseExchangeWithUniform(*ParallelPair(), *MakeUniform(e3, 2)),
            (BaseExchange{Side::kUIndependentBaseOfM, {0, 2}}));
  EXPECT_THROW(BaseExchangeWithUniform(*MakeFree(e3),
                                       *MakeUniform(ElementSet::Range(2), 1)),
               ArgumentError);
}

TEST(BaseExchangeTest, ResultIsCommonIndependentBaseOfOneSide) {
  for (int n = 0; n <= 5; ++n) {
    const ElementSet ground = ElementSet::Range(n);
    for (const SmallMatroid& s : EnumerateLabeledMatroids(n)) {
      const auto m = s.ToExplicit();
      for (int cap = 0; cap <= n; ++cap) {
        const auto u = MakeUniform(ground, cap);
        const BaseExchange r = BaseExchangeWithUniform(*m, *u);
        ASSERT_TRUE(m->IsIndependent(r.set));
        ASSERT_TRUE(u->IsIndependent(r.set));
        if (r.side == Side::kMIndependentBaseOfU) {
          ASSERT_TRUE(u->IsBase(r.set));
        } else {
          ASSERT_TRUE(m->IsBase(r.set));
        }
      }
    }
  }
}

}  // namespace
}  // namespace matroid_forge
