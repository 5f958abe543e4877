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

#include "matroid_forge/matroid.h"

#include <algorithm>
#include <memory>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "matroid_forge/errors.h"
#include "matroid_forge/explicit_matroid.h"
#include "matroid_forge/rng.h"
#include "matroid_forge/zoo.h"
#include "tests/test_util.h"

namespace matroid_forge {
namespace {

using ::matroid_forge::testing::BruteRank;
using ::matroid_forge::testing::BruteSpan;
using ::matroid_forge::testing::Triangle;

std::shared_ptr<const GraphicMatroid> RandomGraph(uint64_t seed, int edges,
                                                  int vertices) {
  Rng rng(seed);
  std::vector<Edge> list;
  for (int id = 0; id < edges; ++id) {
    list.push_back({id, rng.Between(0, vertices - 1),
                    rng.Between(0, vertices - 1)});
  }
  return std::make_shared<const GraphicMatroid>(list);
}

TEST(MatroidTest, IndependenceExamples) {
  const auto u = MakeUniform(ElementSet::Range(4), 2);
  EXPECT_TRUE(u->IsIndependent({0, 1}));
  EXPECT_FALSE(u->IsIndependent({0, 1, 2}));
  EXPECT_FALSE(Triangle()->IsIndependent({0, 1, 2}));
  EXPECT_TRUE(Triangle()->IsIndependent({0, 2}));
}

TEST(MatroidTest, QueriesOutsideGroundThrow) {
  const auto u = MakeUniform(ElementSet::Range(3), 2);
  EXPECT_THROW(u->IsIndependent({3}), DomainError);
  EXPECT_THROW(u->Rank({0, 5}), DomainError);
  EXPECT_THROW(u->Span({7}), DomainError);
  EXPECT_THROW(u->MaxIndependentSubset({9}), DomainError);
}

TEST(MatroidTest, RankExamples) {
  EXPECT_EQ(MakeUniform(ElementSet::Range(5), 2)->Rank(), 2);
  EXPECT_EQ(Triangle()->Rank(ElementSet()), 0);
  EXPECT_EQ(Triangle()->Rank(), 2);
  EXPECT_EQ(Triangle()->Rank(), BruteRank(*Triangle(), {0, 1, 2}));
}

TEST(MatroidTest, MaxIndependentSubsetIsAscendingGreedy) {
  const auto u1 = MakeUniform(ElementSet::Range(6), 1);
  EXPECT_EQ(u1->MaxIndependentSubset({2, 5}), (ElementSet{2}));
  EXPECT_EQ(u1->MaxIndependentSubset(ElementSet()), ElementSet());
  EXPECT_EQ(Triangle()->MaxIndependentSubset({0, 1, 2}), (ElementSet{0, 1}));
}

TEST(MatroidTest, ExtendIndependentKeepsSeed) {
  EXPECT_EQ(Triangle()->ExtendIndependent({2}, {0, 1}), (ElementSet{0, 2}));
  EXPECT_EQ(Triangle()->ExtendIndependent({1, 2}, {0}), (ElementSet{1, 2}));
}

TEST(MatroidTest, SpanExamples) {
  const auto u2 = MakeUniform(ElementSet::Range(4), 2);
  EXPECT_EQ(u2->Span({0, 1}), ElementSet::Range(4));
  EXPECT_EQ(MakeUniform(ElementSet::Range(4), 1)->Span(ElementSet()),
            ElementSet());
  EXPECT_EQ(Triangle()->Span({0, 1}), (ElementSet{0, 1, 2}));
  EXPECT_TRUE(Triangle()->Spans({0, 1}, {2}));
  EXPECT_FALSE(Triangle()->Spans({0}, {1}));
}

TEST(MatroidTest, SpanMatchesRankComparisonOnRandomGraphs) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = RandomGraph(seed, 9, 5);
    ForEachSubset(g->ground(), [&](ElementSet x) {
      ASSERT_EQ(g->Span(x), BruteSpan(*g, x)) << "seed " << seed;
      ASSERT_EQ(g->Rank(x), BruteRank(*g, x)) << "seed " << seed;
    });
  }
}

TEST(MatroidTest, SpanIsClosureOperatorOnTenElements) {
  for (uint64_t seed = 1; seed <= 4; ++seed) {
    const auto g = RandomGraph(seed, 10, 6);
    ForEachSubset(g->ground(), [&](ElementSet x) {
      const ElementSet sx = g->Span(x);
      ASSERT_TRUE(x.IsSubsetOf(sx));
      ASSERT_EQ(g->Span(sx), sx);
      for (Element e : g->ground() - x) {
        ASSERT_TRUE(sx.IsSubsetOf(g->Span(x.With(e))));
      }
    });
  }
}

TEST(MatroidTest, BasesShareOneSize) {
  const auto g = RandomGraph(7, 8, 5);
  const std::vector<ElementSet> bases = Bases(*g);
  ASSERT_FALSE(bases.empty());
  for (ElementSet b : bases) EXPECT_EQ(b.size(), g->Rank());
}

TEST(MinorTest, ContractionOfUniform) {
  const MatroidPtr u = MakeUniform(ElementSet::Range(3), 2);
  const auto m = Minor(u, {0}, ElementSet());
  EXPECT_EQ(m->ground(), (ElementSet{1, 2}));
  EXPECT_TRUE(m->IsIndependent({1}));
  EXPECT_FALSE(m->IsIndependent({1, 2}));
}

TEST(MinorTest, DeletionFromTriangleIsFree) {
  const auto m = Delete(Triangle(), {2});
  EXPECT_EQ(m->ground(), (ElementSet{0, 1}));
  EXPECT_TRUE(m->IsIndependent({0, 1}));
}

TEST(MinorTest, OverlapAndDomainErrors) {
  EXPECT_THROW(Minor(Triangle(), {0}, {0, 1}), ArgumentError);
  EXPECT_THROW(Minor(Triangle(), {5}, ElementSet()), DomainError);
}

TEST(MinorTest, SpecRecordsGreedyBasisAndFlattens) {
  const auto m = Contract(Triangle(), {0, 1, 2});
  EXPECT_EQ(m->spec().contracted_basis, (ElementSet{0, 1}));
  const auto nested = Delete(Contract(Triangle(), {0}), {1});
  EXPECT_EQ(dynamic_cast<const MinorMatroid*>(nested->spec().base.get()),
            nullptr);
  EXPECT_EQ(nested->spec().contracted, (ElementSet{0}));
  EXPECT_EQ(nested->spec().deleted, (ElementSet{1}));
  EXPECT_EQ(nested->ground(), (ElementSet{2}));
}

TEST(MinorTest, ContractionAndDeletionCommuteOnRandomGraphs) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const MatroidPtr g = RandomGraph(seed, 7, 4);
    ForEachSubset(g->ground(), [&](ElementSet x) {
      const ElementSet rest = g->ground() - x;
      ForEachSubset(rest, [&](ElementSet y) {
        const auto a = Delete(Contract(g, x), y);
        const auto b = Contract(Delete(g, y), x);
        ASSERT_TRUE(SameIndependence(*a, *b)) << x.ToString() << y.ToString();
      });
    });
  }
}

TEST(MinorTest, PredicateDoesNotDependOnContractedBasis) {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const MatroidPtr g = RandomGraph(seed, 8, 5);
    ForEachSubset(g->ground(), [&](ElementSet x) {
      const auto reference = Contract(g, x);
      for (ElementSet basis : Bases(*Restrict(g, x))) {
        const auto other = MinorWithBasis(g, x, basis, ElementSet());
        ASSERT_TRUE(SameIndependence(*reference, *other));
      }
    });
  }
}

TEST(MinorTest, MinorWithBasisRejectsNonMaximalBasis) {
  EXPECT_THROW(MinorWithBasis(Triangle(), {0, 1}, {0}, ElementSet()),
               ArgumentError);
  EXPECT_THROW(MinorWithBasis(Triangle(), {0, 1, 2}, {0, 1, 2}, ElementSet()),
               ArgumentError);
}

TEST(DirectSumTest, Examples) {
  const auto sum = DirectSum({MakeUniform({0, 1}, 1), MakeUniform({2, 3}, 1)});
  EXPECT_TRUE(sum->IsIndependent({0, 2}));
  EXPECT_FALSE(sum->IsIndependent({0, 1}));
  const auto empty = DirectSum({});
  EXPECT_EQ(empty->ground(), ElementSet());
  EXPECT_EQ(empty->Rank(), 0);
  EXPECT_THROW(DirectSum({MakeUniform({0, 1}, 1), MakeUniform({1, 2}, 1)}),
               ArgumentError);
}

TEST(DirectSumTest, RankIsAdditiveOnRandomParts) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = RandomGraph(trial + 1, 5, 4);
    const auto u = MakeUniform(ElementSet::FromMask(0x3e0), rng.Between(0, 5));
    const auto sum = DirectSum({g, u});
    ForEachSubset(sum->ground(), [&](ElementSet x) {
      ASSERT_EQ(sum->Rank(x), BruteRank(*sum, x));
      ASSERT_EQ(sum->Rank(x), g->Rank(x & g->ground()) + u->Rank(x & u->ground()));
    });
  }
}

TEST(CircuitsTest, Examples) {
  const auto u = MakeUniform(ElementSet::Range(4), 2);
  const std::vector<ElementSet> c = Circuits(*u);
  EXPECT_EQ(c.size(), 4u);
  for (ElementSet s : c) EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(Circuits(*Triangle()), (std::vector<ElementSet>{{0, 1, 2}}));
  EXPECT_TRUE(Circuits(*MakeFree(ElementSet::Range(5))).empty());
  EXPECT_THROW(Circuits(*MakeFree(ElementSet::Range(17))), CapacityError);
}

TEST(CircuitsTest, CircuitsAreMinimalDependentSets) {
  const auto g = RandomGraph(3, 8, 4);
  const std::vector<ElementSet> circuits = Circuits(*g);
  ForEachSubset(g->ground(), [&](ElementSet s) {
    bool minimal_dependent = !g->IsIndependent(s);
    for (Element e : s) {
      minimal_dependent = minimal_dependent && g->IsIndependent(s.Without(e));
    }
    const bool listed =
        std::find(circuits.begin(), circuits.end(), s) != circuits.end();
    ASSERT_EQ(listed, minimal_dependent) << s.ToString();
  });
}

TEST(RankCacheTest, MemoizedAndUnmemoizedAgree) {
  const std::size_t saved = Matroid::DefaultRankCacheCapacity();
  Matroid::SetDefaultRankCacheCapacity(0);
  const auto plain = RandomGraph(5, 10, 6);
  Matroid::SetDefaultRankCacheCapacity(4);  // tiny: most results unrecorded
  const auto tiny = RandomGraph(5, 10, 6);
  Matroid::SetDefaultRankCacheCapacity(saved);
  const auto cached = RandomGraph(5, 10, 6);
  for (int pass = 0; pass < 2; ++pass) {
    ForEachSubset(plain->ground(), [&](ElementSet x) {
      const int r = plain->Rank(x);
      ASSERT_EQ(cached->Rank(x), r);
      ASSERT_EQ(tiny->Rank(x), r);
    });
  }
}

TEST(RankCacheTest, ConcurrentQueriesAgree) {
  const auto g = RandomGraph(9, 12, 7);
  std::vector<int> expected;
  ForEachSubset(g->ground(), [&](ElementSet x) {
    expected.push_back(BruteRank(*g, x));
  });
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      std::size_t k = 0;
      ForEachSubset(g->ground(), [&](ElementSet x) {
        if (g->Rank(x) != expected[k++]) ++mismatches[t];
      });
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

}  // namespace
}  // namespace matroid_forge
