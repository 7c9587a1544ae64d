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

#include "m3cover/structure.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "gtest/gtest.h"
#include "m3cover/generators.h"
#include "m3cover/multipole.h"
#include "test_support.h"

namespace m3cover {
namespace {

TEST(GirthTest, Examples) {
  EXPECT_EQ(Girth(Petersen()), 5);
  EXPECT_EQ(Girth(K4()), 3);
  EXPECT_EQ(Girth(Prism(4)), 4);
  EXPECT_EQ(Girth(*BuildFamily({.k = 4, .a = 1, .b = 1})), 5);
  EXPECT_EQ(Girth(Graph(2, {{0, 1}, {0, 1}, {0, 1}})), 2);
  EXPECT_EQ(Girth(Graph(2, {{0, 0}, {0, 1}, {1, 1}})), 1);
  EXPECT_FALSE(Girth(Graph(3, {{0, 1}, {1, 2}})).has_value());
}

TEST(ShortestCycleThroughTest, Examples) {
  const Graph p = Petersen();
  for (EdgeRef e = 0; e < p.edge_count(); ++e) {
    EXPECT_EQ(ShortestCycleThrough(p, e), 5);
    const std::vector<int> cycle = ShortestCycleVerticesThrough(p, e);
    ASSERT_EQ(cycle.size(), 5u);
    for (size_t i = 0; i < cycle.size(); ++i) {
      EXPECT_TRUE(p.FindLink(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
  }
  EXPECT_EQ(ShortestCycleThrough(K4(), 0), 3);
  // Two triangles joined by the bridge 2-3.
  const Graph barbell(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5},
                          {3, 5}});
  EXPECT_FALSE(ShortestCycleThrough(barbell, *barbell.FindLink(2, 3)));
}

TEST(CyclicConnectivityTest, Examples) {
  absl::StatusOr<ConnectivityResult> p = CyclicConnectivityOracle(Petersen());
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->value, 5);
  EXPECT_EQ(CyclicEdgeConnectivity(Petersen()).value, 5);

  absl::StatusOr<ConnectivityResult> g11 =
      CyclicConnectivityOracle(*BuildFamily({.k = 2, .a = 1, .b = 1}));
  ASSERT_TRUE(g11.ok());
  EXPECT_EQ(g11->value, 2);

  absl::StatusOr<ConnectivityResult> g4 =
      CyclicConnectivityOracle(*BuildFamily({.k = 4, .a = 1, .b = 0}));
  ASSERT_TRUE(g4.ok());
  EXPECT_EQ(g4->value, 4);

  EXPECT_EQ(CyclicEdgeConnectivity(*BuildFamily({.k = 4, .a = 1, .b = 1})).value,
            4);
  EXPECT_FALSE(CyclicEdgeConnectivity(K4()).value.has_value());
  EXPECT_FALSE(CyclicConnectivityOracle(K4())->value.has_value());
  EXPECT_FALSE(CyclicConnectivityOracle(Petersen(), 8).ok());
}

TEST(CyclicConnectivityTest, WitnessCutIsCycleSeparating) {
  for (const testing::NamedGraph& ng : testing::ConnectivityCorpus()) {
    const ConnectivityResult r = CyclicEdgeConnectivity(ng.graph);
    if (!r.value) continue;
    std::vector<EdgeRef> cut;
    EXPECT_TRUE(IsCycleSeparating(ng.graph, r.side, &cut)) << ng.name;
    EXPECT_EQ(static_cast<int>(cut.size()), *r.value) << ng.name;
    std::vector<EdgeRef> reported = r.cut;
    std::sort(cut.begin(), cut.end());
    std::sort(reported.begin(), reported.end());
    EXPECT_EQ(cut, reported) << ng.name;
  }
}

TEST(CyclicConnectivityTest, AlgorithmMatchesOracleOnCorpus) {
  for (const testing::NamedGraph& ng : testing::ConnectivityCorpus()) {
    ASSERT_LE(ng.graph.vertex_count(), 26) << ng.name;
    absl::StatusOr<ConnectivityResult> oracle =
        CyclicConnectivityOracle(ng.graph);
    ASSERT_TRUE(oracle.ok());
    EXPECT_EQ(CyclicEdgeConnectivity(ng.graph).value, oracle->value)
        << ng.name;
  }
}

TEST(BridgelessTest, Examples) {
  EXPECT_TRUE(IsBridgeless(Petersen()));
  const Graph barbell(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5},
                          {3, 5}});
  EXPECT_FALSE(IsBridgeless(barbell));
  EXPECT_TRUE(IsBridgeless(Graph(2, {{0, 1}, {0, 1}})));
  for (int k : {2, 4}) {
    EXPECT_TRUE(IsBridgeless(*BuildFamily({.k = k, .a = 2, .b = 2})));
  }
}

TEST(IsomorphismTest, Examples) {
  EXPECT_TRUE(AreIsomorphic(*JoinSelf(*CutEdge(Petersen(), 3), 0, 1),
                            Petersen()));
  EXPECT_FALSE(AreIsomorphic(Petersen(), *JoinSelf(PoleB(), 0, 1)));
  EXPECT_TRUE(AreIsomorphic(InducedSubmultipole(PoleAPrime(), PoleAPrimeH1()),
                            BlanusaBlock()));
  EXPECT_FALSE(AreIsomorphic(Prism(5), Petersen()));
  EXPECT_FALSE(AreIsomorphic(testing::BlanusaSnark(), Prism(9)));
}

TEST(IsomorphismTest, RelabelledGraphsMatch) {
  const Graph p = Petersen();
  const std::vector<int> perm = {7, 2, 9, 0, 4, 1, 8, 3, 6, 5};
  std::vector<Link> links;
  for (const Link& l : p.links()) links.push_back({perm[l.u], perm[l.v]});
  EXPECT_TRUE(AreIsomorphic(Graph(10, links), p));
}

TEST(IExtensionPropertyTest, SmallCubicGraphs) {
  int checked = 0;
  for (int n = 4; n <= 8; n += 2) {
    for (const Graph& g : ConnectedCubicGraphs(n)) {
      const std::optional<int> before = CyclicEdgeConnectivity(g).value;
      for (EdgeRef e1 = 0; e1 < g.edge_count(); ++e1) {
        for (EdgeRef e2 = e1; e2 < g.edge_count(); ++e2) {
          absl::StatusOr<IExtension> ext = IExtend(g, e1, e2);
          ASSERT_TRUE(ext.ok());
          EXPECT_EQ(ext->graph.vertex_count(), n + 2);
          const std::optional<int> after =
              CyclicConnectivityOracle(ext->graph)->value;
          const std::optional<int> through =
              ShortestCycleThrough(ext->graph, ext->added);
          if (!before || !after || !through) continue;
          EXPECT_GE(*after, std::min(*before, *through));
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace m3cover
