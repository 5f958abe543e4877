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

#include "matroid_forge/element_set.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace matroid_forge {
namespace {

TEST(ElementSetTest, BasicAlgebra) {
  const ElementSet a{0, 3, 5};
  const ElementSet b{3, 4};
  EXPECT_EQ((a | b), (ElementSet{0, 3, 4, 5}));
  EXPECT_EQ((a & b), (ElementSet{3}));
  EXPECT_EQ((a - b), (ElementSet{0, 5}));
  EXPECT_EQ((a ^ b), (ElementSet{0, 4, 5}));
  EXPECT_EQ(a.size(), 3);
  EXPECT_TRUE(a.Contains(5));
  EXPECT_FALSE(a.Contains(4));
  EXPECT_EQ(a.Min(), 0);
  EXPECT_EQ(a.Max(), 5);
  EXPECT_TRUE((ElementSet{3}).IsSubsetOf(a));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_TRUE(a.Intersects(b));
}

TEST(ElementSetTest, IteratesAscending) {
  const ElementSet s{63, 7, 0, 12};
  const std::vector<Element> v(s.begin(), s.end());
  EXPECT_EQ(v, (std::vector<Element>{0, 7, 12, 63}));
  EXPECT_EQ(s.ToVector(), v);
  EXPECT_EQ(s.ToString(), "{0, 7, 12, 63}");
  EXPECT_EQ(ElementSet().ToString(), "{}");
}

TEST(ElementSetTest, SmallestTakesPrefix) {
  const ElementSet s{2, 5, 9, 11};
  EXPECT_EQ(s.Smallest(0), ElementSet());
  EXPECT_EQ(s.Smallest(2), (ElementSet{2, 5}));
  EXPECT_EQ(s.Smallest(4), s);
}

TEST(ElementSetTest, FromVectorRejectsOutOfRange) {
  const std::vector<Element> ok = {1, 4};
  EXPECT_EQ(ElementSet::FromVector(ok), (ElementSet{1, 4}));
  const std::vector<Element> bad = {1, 64};
  EXPECT_THROW(ElementSet::FromVector(bad), std::out_of_range);
  const std::vector<Element> negative = {-1};
  EXPECT_THROW(ElementSet::FromVector(negative), std::out_of_range);
}

TEST(ElementSetTest, RangeCoversFullWidth) {
  EXPECT_EQ(ElementSet::Range(0), ElementSet());
  EXPECT_EQ(ElementSet::Range(3), (ElementSet{0, 1, 2}));
  EXPECT_EQ(ElementSet::Range(64).size(), 64);
}

TEST(ElementSetTest, CanonicalOrderIsLexicographicOnSortedSequences) {
  // Prefixes first, then lexicographic comparison of ascending sequences.
  std::vector<ElementSet> sets = {{1}, {0, 2}, {}, {0}, {0, 1, 2}, {0, 1}};
  Canonicalize(sets);
  const std::vector<ElementSet> expected = {{}, {0}, {0, 1}, {0, 1, 2}, {0, 2},
                                            {1}};
  EXPECT_EQ(sets, expected);
  EXPECT_TRUE(CanonicalLess(ElementSet{0, 5}, ElementSet{1}));
  EXPECT_FALSE(CanonicalLess(ElementSet{1}, ElementSet{1}));
}

TEST(ElementSetTest, CanonicalizeRemovesDuplicates) {
  std::vector<ElementSet> sets = {{2}, {1}, {2}};
  Canonicalize(sets);
  EXPECT_EQ(sets, (std::vector<ElementSet>{{1}, {2}}));
}

TEST(ElementSetTest, ForEachSubsetVisitsAllInMaskOrder) {
  const ElementSet ground{1, 4, 6};
  std::vector<uint64_t> masks;
  ForEachSubset(ground, [&](ElementSet s) {
    EXPECT_TRUE(s.IsSubsetOf(ground));
    masks.push_back(s.mask());
  });
  EXPECT_EQ(masks.size(), 8u);
  EXPECT_TRUE(std::is_sorted(masks.begin(), masks.end()));
  EXPECT_EQ(std::adjacent_find(masks.begin(), masks.end()), masks.end());
}

}  // namespace
}  // namespace matroid_forge
