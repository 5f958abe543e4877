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

#include "matroid_forge/intersection.h"

#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "matroid_forge/edmonds.h"
#include "matroid_forge/errors.h"
#include "matroid_forge/rng.h"
#include "matroid_forge/zoo.h"
#include "tests/test_util.h"

namespace matroid_forge {
namespace {

using ::matroid_forge::testing::BruteRank;
using ::matroid_forge::testing::BruteSpan;
using ::matroid_forge::testing::RandomMatroid;
using ::matroid_forge::testing::RandomPartition;
using ::matroid_forge::testing::Triangle;

PartitionMatroid SinglePart(ElementSet ground, int cap) {
  return PartitionMatroid({{ground, cap}});
}

bool Common(const Matroid& m, const Matroid& n, ElementSet s) {
  return m.IsIndependent(s) && n.IsIndependent(s);
}

// Brute-force maximality: no element can be added.
bool BruteMaximal(const Matroid& m, const Matroid& n, ElementSet i) {
  for (Element e : m.ground() - i) {
    if (Common(m, n, i.With(e))) return false;
  }
  return true;
}

// Brute-force condition: no nonempty union W of parts has an N-independent
// base of M restricted to W.
bool BruteCondition(const Matroid& m, const PartitionMatroid& n) {
  for (uint64_t mask = 1; mask < (uint64_t{1} << n.num_parts()); ++mask) {
    const ElementSet w = n.UnionOfParts(mask);
    const int r = BruteRank(m, w);
    bool found = false;
    ForEachSubset(w, [&](ElementSet b) {
      if (!found && b.size() == r && Common(m, n, b)) found = true;
    });
    if (found) return false;
  }
  return true;
}

PartIndexSet BruteTheta(const Matroid& m, const PartitionMatroid& n,
                        ElementSet i) {
  const ElementSet span = BruteSpan(m, i);
  PartIndexSet out;
  for (int k = 0; k < n.num_parts(); ++k) {
    if (n.part(k).elements.IsSubsetOf(span)) out.Insert(k);
  }
  return out;
}

TEST(ExtendToMaximalCommonTest, Examples) {
  const auto free4 = MakeFree(ElementSet::Range(4));
  const PartitionMatroid two({{{0, 1}, 1}, {{2, 3}, 1}});
  EXPECT_EQ(ExtendToMaximalCommon(free4, two, ElementSet()),
            (ElementSet{0, 2}));
  EXPECT_EQ(ExtendToMaximalCommon(free4, two, {3}), (ElementSet{0, 3}));

  const ElementSet e3 = ElementSet::Range(3);
  EXPECT_EQ(ExtendToMaximalCommon(MakeUniform(e3, 1), SinglePart(e3, 2),
                                  ElementSet()),
            (ElementSet{0}));
}

TEST(ExtendToMaximalCommonTest, RejectsNonCommonStart) {
  const auto free4 = MakeFree(ElementSet::Range(4));
  const PartitionMatroid two({{{0, 1}, 1}, {{2, 3}, 1}});
  EXPECT_THROW(ExtendToMaximalCommon(free4, two, {0, 1}), InvalidInputError);
  EXPECT_THROW(
      ExtendToMaximalCommon(MakeFree(ElementSet::Range(3)), two, ElementSet()),
      ArgumentError);
}

TEST(ExtendToMaximalCommonTest, RandomStartsBecomeMaximal) {
  Rng rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.Between(0, 10);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 4);
    ElementSet start;
    for (Element e : m->ground()) {
      if (rng.Bernoulli(0.3) && Common(*m, *p, start.With(e))) start.Insert(e);
    }
    const ElementSet out = ExtendToMaximalCommon(m, *p, start);
    ASSERT_TRUE(start.IsSubsetOf(out));
    ASSERT_TRUE(Common(*m, *p, out));
    ASSERT_TRUE(BruteMaximal(*m, *p, out)) << m->Describe() << p->Describe();
    ASSERT_TRUE(IsMaximalCommon(*m, *p, out));
  }
}

TEST(IsMaximalCommonTest, AgreesWithBruteForce) {
  Rng rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.Between(0, 7);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 3);
    ForEachSubset(m->ground(), [&](ElementSet i) {
      if (!Common(*m, *p, i)) return;
      ASSERT_EQ(IsMaximalCommon(*m, *p, i), BruteMaximal(*m, *p, i));
    });
  }
}

TEST(CheckPartUnionConditionTest, Examples) {
  const ElementSet e2 = ElementSet::Range(2);
  const ConditionReport bad =
      CheckPartUnionCondition(MakeUniform(e2, 1), SinglePart(e2, 1));
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.violating_union.has_value());
  EXPECT_EQ(*bad.violating_union, e2);
  EXPECT_EQ(*bad.base, (ElementSet{0}));
  EXPECT_EQ(*bad.violating_parts, (PartIndexSet{0}));

  const ConditionReport good =
      CheckPartUnionCondition(MakeFree(e2), SinglePart(e2, 1));
  EXPECT_TRUE(good.holds);
  EXPECT_FALSE(good.violating_union.has_value());
}

TEST(CheckPartUnionConditionTest, AgreesWithBruteForce) {
  Rng rng(23);
  int holds = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.Between(0, 8);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 4);
    const ConditionReport r = CheckPartUnionCondition(m, *p);
    ASSERT_EQ(r.holds, BruteCondition(*m, *p))
        << m->Describe() << " / " << p->Describe();
    holds += r.holds;
    if (!r.holds) {
      const ElementSet w = *r.violating_union;
      ASSERT_EQ(w, p->UnionOfParts(r.violating_parts->mask()));
      ASSERT_TRUE(r.base->IsSubsetOf(w));
      ASSERT_EQ(r.base->size(), BruteRank(*m, w));
      ASSERT_TRUE(Common(*m, *p, *r.base));
    }
  }
  EXPECT_GT(holds, 0);
  EXPECT_LT(holds, 500);
}

TEST(CheckPartUnionConditionTest, CapacityOnManyParts) {
  std::vector<Part> parts;
  for (int e = 0; e < 25; ++e) parts.push_back({{e}, 1});
  EXPECT_THROW(CheckPartUnionCondition(MakeFree(ElementSet::Range(25)),
                                       PartitionMatroid(parts)),
               CapacityError);
}

TEST(ThetaTest, Examples) {
  const auto t = Triangle();
  const PartitionMatroid p({{{0, 1}, 1}, {{2}, 1}});
  EXPECT_EQ(Theta(*t, p, ElementSet()), PartIndexSet());
  EXPECT_EQ(Theta(*t, p, {0}), PartIndexSet());
  EXPECT_EQ(Theta(*t, p, {2}), (PartIndexSet{1}));
  EXPECT_EQ(Theta(*t, p, {0, 1}), (PartIndexSet{0, 1}));
  EXPECT_EQ(Theta(*t, p, {1, 2}), (PartIndexSet{0, 1}));
}

TEST(MaximizeThetaTest, ExactResultIsThetaMaximal) {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.Between(0, 10);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 4);
    ElementSet j;
    for (Element e : m->ground()) {
      if (rng.Bernoulli(0.3) && Common(*m, *p, j.With(e))) j.Insert(e);
    }
    const ThetaResult r = MaximizeTheta(*m, *p, j);
    ASSERT_TRUE(r.exact);
    ASSERT_TRUE(Common(*m, *p, r.common));
    ASSERT_TRUE(j.IsSubsetOf(BruteSpan(*m, r.common)));
    ASSERT_EQ(r.theta, BruteTheta(*m, *p, r.common));
    ASSERT_TRUE(BruteTheta(*m, *p, j).IsSubsetOf(r.theta));
    // No common K spanning r.common has a strictly larger Θ.
    const ElementSet span = BruteSpan(*m, r.common);
    ForEachSubset(m->ground(), [&](ElementSet k) {
      if (!Common(*m, *p, k) || !span.IsSubsetOf(BruteSpan(*m, k))) return;
      const PartIndexSet theta = BruteTheta(*m, *p, k);
      ASSERT_FALSE(r.theta.IsSubsetOf(theta) && theta != r.theta)
          << "K=" << k.ToString() << " improves " << r.common.ToString();
    });
  }
}

TEST(MaximizeThetaTest, HeuristicAboveThreshold) {
  IntersectionOptions options;
  options.thresholds.theta = 2;
  const auto t = Triangle();
  const PartitionMatroid p({{{0, 1}, 1}, {{2}, 1}});
  RunLog log;
  const ThetaResult r = MaximizeTheta(*t, p, ElementSet(), options, &log);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(log.heuristic_theta);
  EXPECT_TRUE(Common(*t, p, r.common));
  EXPECT_EQ(r.theta, Theta(*t, p, r.common));
}

TEST(FindSpanningCommonBaseTest, Examples) {
  const ElementSet e2 = ElementSet::Range(2);
  const auto free2 = MakeFree(e2);
  const PartitionMatroid u1 = SinglePart(e2, 1);
  EXPECT_EQ(FindSpanningCommonBase(free2, u1, ElementSet()).base,
            (ElementSet{0}));
  EXPECT_EQ(FindSpanningCommonBase(free2, u1, {1}).base, (ElementSet{1}));
}

TEST(FindSpanningCommonBaseTest, ThrowsWhenConditionFails) {
  const ElementSet e2 = ElementSet::Range(2);
  try {
    FindSpanningCommonBase(MakeUniform(e2, 1), SinglePart(e2, 1), ElementSet());
    FAIL() << "expected ConditionViolatedError";
  } catch (const ConditionViolatedError& e) {
    EXPECT_EQ(e.violating_union(), e2);
  }
}

TEST(FindSpanningCommonBaseTest, PostconditionsOnRandomInstances) {
  Rng rng(47);
  int checked = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const int n = rng.Between(0, 9);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 3);
    if (!BruteCondition(*m, *p)) continue;
    ElementSet j;
    for (Element e : m->ground()) {
      if (rng.Bernoulli(0.4) && Common(*m, *p, j.With(e))) j.Insert(e);
    }
    const SideResult r = FindSpanningCommonBase(m, *p, j);
    ASSERT_TRUE(m->IsIndependent(r.base));
    ASSERT_TRUE(p->IsBase(r.base));
    ASSERT_TRUE(j.IsSubsetOf(BruteSpan(*m, r.base)));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(FindSpanningCommonBaseTest, HeuristicPathKeepsPostconditions) {
  IntersectionOptions options;
  options.thresholds.theta = 0;
  options.thresholds.theta_restarts = 2;
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.Between(1, 9);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 3);
    if (!BruteCondition(*m, *p)) continue;
    RunLog log;
    const SideResult r = FindSpanningCommonBase(m, *p, ElementSet(), options, &log);
    ASSERT_TRUE(m->IsIndependent(r.base));
    ASSERT_TRUE(p->IsBase(r.base));
  }
}

TEST(BuildWitnessTest, Examples) {
  const ElementSet e3 = ElementSet::Range(3);
  const Witness w =
      BuildWitness(MakeUniform(e3, 2), SinglePart(e3, 1));
  EXPECT_EQ(w, (Witness{{0}, ElementSet(), {0}}));

  const auto t = Triangle();
  const PartitionMatroid p({{{0, 1}, 1}, {{2}, 1}});
  const Witness tw = BuildWitness(t, p);
  EXPECT_EQ(tw.common.size(), 2);
  EXPECT_TRUE(VerifyWitness(*t, p, tw).ok());

  const Witness empty = BuildWitness(MakeFree(ElementSet()), PartitionMatroid({}));
  EXPECT_EQ(empty, Witness{});
  EXPECT_TRUE(VerifyWitness(*MakeFree(ElementSet()), PartitionMatroid({}), empty)
                  .ok());
}

TEST(BuildWitnessTest, TraceRecordsSteps) {
  const auto t = Triangle();
  const PartitionMatroid p({{{0, 1}, 1}, {{2}, 1}});
  RunLog log;
  BuildWitness(t, p, {}, &log);
  ASSERT_FALSE(log.events.empty());
  for (const TraceEvent& e : log.events) {
    EXPECT_GE(e.depth, 0);
    EXPECT_FALSE(e.step.empty());
  }
}

TEST(BuildWitnessTest, RandomWitnessesVerifyAndAreMaximum) {
  Rng rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.Between(0, 12);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 4);
    const Witness w = BuildWitness(m, *p);
    const VerificationReport report = VerifyWitness(*m, *p, w);
    ASSERT_TRUE(report.ok()) << report.ToString();
    ASSERT_EQ(w.common.size(), BruteForceMaxCommon(*m, *p).size());
    // Span cover recomputed from the brute-force oracle.
    ASSERT_EQ(BruteSpan(*m, w.m_side) | BruteSpan(*p, w.n_side), m->ground());
  }
}

TEST(BuildWitnessTest, DeterministicForFixedOptions) {
  Rng rng(67);
  IntersectionOptions options;
  options.thresholds.theta = 3;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.Between(0, 10);
    const MatroidPtr m = RandomMatroid(rng, n);
    const auto p = RandomPartition(rng, n, 4);
    EXPECT_EQ(BuildWitness(m, *p, options), BuildWitness(m, *p, options));
  }
}

TEST(VerifyWitnessTest, ReportsEachFailure) {
  const auto t = Triangle();
  const PartitionMatroid p({{{0, 1}, 1}, {{2}, 1}});
  auto failed = [&](const Witness& w) {
    std::vector<std::string> names;
    for (const VerificationCheck& c : VerifyWitness(*t, p, w).checks) {
      if (!c.passed) names.push_back(c.name);
    }
    return names;
  };
  // Valid witness for reference.
  EXPECT_TRUE(failed({{0, 2}, {0, 2}, ElementSet()}).empty());
  EXPECT_EQ(failed({{0, 2}, {0, 2}, {2}}),
            (std::vector<std::string>{"bipartition"}));
  EXPECT_EQ(failed({{0, 1}, {0, 1}, ElementSet()}),
            (std::vector<std::string>{"independent_in_N"}));
  EXPECT_EQ(failed({{0}, {0}, ElementSet()}),
            (std::vector<std::string>{"span_cover", "min_max"}));
  EXPECT_EQ(failed({{5}, {5}, ElementSet()}),
            (std::vector<std::string>{"subsets"}));
  EXPECT_FALSE(VerifyWitness(*t, PartitionMatroid({{{0}, 1}}), Witness{}).ok());
  EXPECT_FALSE(VerificationReport{}.ok());
}

}  // namespace
}  // namespace matroid_forge
