// Copyright 2026 The m3cover Authors.
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

#include "m3cover/matching.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "m3cover/generators.h"
#include "m3cover/multipole.h"
#include "test_support.h"

namespace m3cover {
namespace {

using testing::ColoringsByAssignment;
using testing::PerfectMatchingsBySubsets;

std::set<std::vector<EdgeRef>> AsSets(const std::vector<EdgeSet>& sets) {
  std::set<std::vector<EdgeRef>> out;
  for (const EdgeSet& s : sets) out.insert(s.ToVector());
  return out;
}

std::vector<Multipole> SmallMultipoles() {
  std::vector<Multipole> all = {PoleA(), PoleB(), BlanusaBlock(), PoleBPrime(),
                                Prism(3), Prism(4)};
  for (int n = 4; n <= 12; n += 2) {
    for (const Graph& g : ConnectedCubicGraphs(n)) all.push_back(g);
  }
  return all;
}

TEST(PerfectMatchingsTest, KnownCounts) {
  EXPECT_EQ(PerfectMatchings(Petersen()).size(), 6u);
  EXPECT_EQ(CountPerfectMatchings(Petersen()), 6);
  EXPECT_EQ(PerfectMatchings(K4()).size(), 3u);
  EXPECT_EQ(CountPerfectMatchings(K4()), 3);
  const Multipole odd("odd", 3, {{0, 1}, {1, 2}, {0, 2}}, {}, {});
  EXPECT_EQ(CountPerfectMatchings(odd), 0);
}

TEST(PerfectMatchingsTest, AgreesWithSubsetOracle) {
  for (const Multipole& m : SmallMultipoles()) {
    const std::vector<PerfectMatching> fast = PerfectMatchings(m);
    EXPECT_EQ(AsSets(fast), AsSets(PerfectMatchingsBySubsets(m))) << m.name();
    EXPECT_EQ(CountPerfectMatchings(m), static_cast<int64_t>(fast.size()));
    for (const PerfectMatching& pm : fast) EXPECT_TRUE(IsPerfectMatching(m, pm));
  }
}

TEST(PerfectMatchingsTest, SortedLexicographically) {
  const std::vector<PerfectMatching> all = PerfectMatchings(PoleAPrime());
  for (size_t i = 1; i < all.size(); ++i) {
    EXPECT_LT(all[i - 1].ToVector(), all[i].ToVector());
  }
}

TEST(PerfectMatchingsTest, LimitStopsEarly) {
  EXPECT_EQ(CountPerfectMatchings(Petersen(), 2), 3);
}

TEST(PerfectMatchingsTest, PoleABoundary) {
  const Multipole a = PoleA();
  absl::StatusOr<std::vector<PerfectMatching>> out = PerfectMatchings(
      a, {{"d0", Membership::kRequiredOut}, {"d1", Membership::kRequiredOut}});
  ASSERT_TRUE(out.ok());
  EXPECT_FALSE(out->empty());
  for (const PerfectMatching& pm : *out) {
    EXPECT_FALSE(pm.Contains(a.DanglingRef(0)));
    EXPECT_FALSE(pm.Contains(a.DanglingRef(1)));
  }
  absl::StatusOr<std::vector<PerfectMatching>> one = PerfectMatchings(
      a, {{"d0", Membership::kRequiredIn}, {"d1", Membership::kRequiredOut}});
  ASSERT_TRUE(one.ok());
  EXPECT_TRUE(one->empty());
  EXPECT_FALSE(PerfectMatchings(a, {{"zz", Membership::kRequiredIn}}).ok());
}

TEST(PerfectMatchingsTest, LoopsNeverMatched) {
  const Multipole m("loop", 2, {{0, 0}, {0, 1}, {1, 1}}, {}, {});
  const std::vector<PerfectMatching> all = PerfectMatchings(m);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].ToVector(), std::vector<EdgeRef>{1});
}

TEST(EdgeColoringTest, AgreesWithAssignmentOracle) {
  for (const Multipole& m : SmallMultipoles()) {
    if (m.edge_count() > 16) continue;
    absl::StatusOr<std::vector<EdgeColoring>> all = EdgeColorings(m);
    ASSERT_TRUE(all.ok());
    EXPECT_EQ(static_cast<int64_t>(all->size()), ColoringsByAssignment(m))
        << m.name();
  }
}

TEST(EdgeColoringTest, ColoringsAreProperAndClassesAreMatchings) {
  for (const Multipole& m : SmallMultipoles()) {
    absl::StatusOr<std::vector<EdgeColoring>> all = EdgeColorings(m);
    ASSERT_TRUE(all.ok());
    std::set<std::vector<int>> distinct;
    for (const EdgeColoring& c : *all) {
      EXPECT_TRUE(IsProperColoring(m, c));
      for (int color = 1; color <= 3; ++color) {
        EXPECT_TRUE(IsPerfectMatching(m, c.ColorClass(color)));
      }
      distinct.insert(c.colors);
    }
    EXPECT_EQ(distinct.size(), all->size());
    EXPECT_EQ(Is3EdgeColorable(m), !all->empty());
  }
}

TEST(EdgeColoringTest, KnownColorability) {
  EXPECT_TRUE(Is3EdgeColorable(K4()));
  EXPECT_FALSE(Is3EdgeColorable(Petersen()));
  EXPECT_FALSE(Is3EdgeColorable(PoleA()));
  EXPECT_FALSE(Is3EdgeColorable(PoleAPrime()));
  EXPECT_FALSE(Is3EdgeColorable(testing::BlanusaSnark()));
  EXPECT_FALSE(Is3EdgeColorable(testing::FlowerSnarkJ5()));
  EXPECT_TRUE(Is3EdgeColorable(Prism(3)));
}

TEST(EdgeColoringTest, BlanusaBlockPairing) {
  const Multipole block = BlanusaBlock();
  absl::StatusOr<std::vector<EdgeColoring>> all = EdgeColorings(block);
  ASSERT_TRUE(all.ok());
  ASSERT_FALSE(all->empty());
  const EdgeRef f1 = block.DanglingRef(*block.FindDangling("f1"));
  const EdgeRef f2 = block.DanglingRef(*block.FindDangling("f2"));
  const EdgeRef f3 = block.DanglingRef(*block.FindDangling("f3"));
  const EdgeRef f4 = block.DanglingRef(*block.FindDangling("f4"));
  for (const EdgeColoring& c : *all) {
    EXPECT_EQ(c[f1], c[f3]);
    EXPECT_EQ(c[f2], c[f4]);
  }
  EXPECT_TRUE(Is3EdgeColorable(
      block, {{"f1", 2}, {"f2", 2}, {"f3", 2}, {"f4", 2}}));
  EXPECT_TRUE(Is3EdgeColorable(
      block, {{"f1", 1}, {"f3", 1}, {"f2", 2}, {"f4", 2}}));
  EXPECT_FALSE(Is3EdgeColorable(block, {{"f1", 1}, {"f3", 2}}));
}

TEST(EdgeColoringTest, FixedColoursRespected) {
  const Multipole b = PoleB();
  absl::StatusOr<std::vector<EdgeColoring>> all =
      EdgeColorings(b, {{b.danglings()[0].label, 3}});
  ASSERT_TRUE(all.ok());
  ASSERT_FALSE(all->empty());
  for (const EdgeColoring& c : *all) {
    EXPECT_EQ(c[b.DanglingRef(0)], 3);
    EXPECT_EQ(c[b.DanglingRef(1)], 3);
  }
  EXPECT_FALSE(EdgeColorings(b, {{"nope", 1}}).ok());
  EXPECT_FALSE(EdgeColorings(b, {{b.danglings()[0].label, 4}}).ok());
}

}  // namespace
}  // namespace m3cover
