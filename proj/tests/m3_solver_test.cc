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

#include "m3cover/m3_solver.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "m3cover/generators.h"
#include "m3cover/matching.h"
#include "m3cover/multipole.h"
#include "test_support.h"

namespace m3cover {
namespace {

// All words of length 1..max_len over two letters.
std::vector<std::string> Words(int max_len) {
  std::vector<std::string> out;
  for (int len = 1; len <= max_len; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string w;
      for (int i = 0; i < len; ++i) w += ((mask >> i) & 1) ? 'B' : 'A';
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Multipole> Blocks(const std::string& word, const Multipole& a,
                              const Multipole& b) {
  std::vector<Multipole> blocks;
  for (char c : word) blocks.push_back(c == 'A' ? a : b);
  return blocks;
}

TEST(M3BruteForceTest, Petersen) {
  absl::StatusOr<M3Result> r = M3BruteForce(Petersen());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->covered, 12);
  EXPECT_EQ(r->total, 15);
  EXPECT_EQ(r->value().ToString(), "12/15");
  EXPECT_EQ(r->matching_count, 6);
  EXPECT_TRUE(IsValidWitness(Petersen(), *r));
}

TEST(M3BruteForceTest, K4) {
  absl::StatusOr<M3Result> r = M3BruteForce(K4());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->covered, 6);
  EXPECT_EQ(r->value().Reduced().ToString(), "1/1");
}

TEST(M3BruteForceTest, AgreesWithSubsetOracle) {
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : ConnectedCubicGraphs(n)) {
      absl::StatusOr<M3Result> r = M3BruteForce(g);
      ASSERT_TRUE(r.ok());
      EXPECT_EQ(r->covered, testing::MaxCoveredBySubsets(g));
      EXPECT_TRUE(IsValidWitness(g, *r));
    }
  }
  EXPECT_EQ(testing::MaxCoveredBySubsets(Petersen()), 12);
}

TEST(M3BruteForceTest, OneExactlyWhenColorable) {
  std::vector<Graph> graphs = {Petersen(), testing::BlanusaSnark(),
                               testing::FlowerSnarkJ5(), Prism(5)};
  for (int n = 4; n <= 12; n += 2) {
    for (Graph& g : ConnectedCubicGraphs(n)) graphs.push_back(std::move(g));
  }
  for (const Graph& g : graphs) {
    absl::StatusOr<M3Result> r = M3BruteForce(g);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->uncovered() == 0, Is3EdgeColorable(g)) << g.name();
  }
}

TEST(M3BruteForceTest, CapExceeded) {
  absl::StatusOr<Graph> g = BuildFamily({.k = 2, .a = 4, .b = 0});
  ASSERT_TRUE(g.ok());
  absl::StatusOr<M3Result> r = M3BruteForce(*g, 100);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kResourceExhausted);
}

TEST(BlockProfileTest, PoleA) {
  const Multipole a = PoleA();
  absl::StatusOr<CoverProfile> p = BlockProfile(a);
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->weight.size(), 64u);
  EXPECT_EQ(p->weight[0], 6);
  for (BoundaryState s = 0; s < 64; ++s) {
    const int m0 = MembershipOf(s, 0);
    if (m0 != MembershipOf(s, 1)) {
      EXPECT_FALSE(p->Reachable(s)) << s;
      continue;
    }
    if (!p->Reachable(s)) continue;
    const int members = std::popcount(static_cast<unsigned>(m0));
    EXPECT_EQ(p->weight[s], members == 3 ? 12 : 6) << s;
  }
  EXPECT_TRUE(p->Reachable(1 | 8));
  EXPECT_TRUE(p->Reachable(3 | 24));
}

TEST(BlockProfileTest, WitnessesAttainWeights) {
  for (const Multipole& m : {PoleA(), PoleB(), PoleBPrime()}) {
    absl::StatusOr<CoverProfile> p = BlockProfile(m);
    ASSERT_TRUE(p.ok());
    for (BoundaryState s = 0; s < p->weight.size(); ++s) {
      if (!p->Reachable(s)) continue;
      const std::array<int, 3>& w = p->witness[s];
      EdgeSet covered = p->matchings[w[0]];
      covered |= p->matchings[w[1]];
      covered |= p->matchings[w[2]];
      EXPECT_EQ(UncoveredWeight(m, covered), p->weight[s]);
      for (int t = 0; t < m.dangling_count(); ++t) {
        int mask = 0;
        for (int i = 0; i < 3; ++i) {
          if (p->matchings[w[i]].Contains(m.DanglingRef(t))) mask |= 1 << i;
        }
        EXPECT_EQ(mask, MembershipOf(s, t));
      }
    }
  }
}

TEST(BlockProfileTest, PoleBCoversEverything) {
  const Multipole b = PoleB();
  absl::StatusOr<CoverProfile> p = BlockProfile(b);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->Min(), 0);
  bool all_covered_at_zero = false;
  for (BoundaryState s = 0; s < p->weight.size(); ++s) {
    if (p->weight[s] == 0 && MembershipOf(s, 0) != 0 &&
        MembershipOf(s, 1) != 0) {
      all_covered_at_zero = true;
    }
  }
  EXPECT_TRUE(all_covered_at_zero);
}

TEST(BlockProfileTest, PoleAPrimeMinimum) {
  absl::StatusOr<CoverProfile> p = BlockProfile(PoleAPrime());
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->Min(), 6);
}

TEST(M3RingDpTest, MatchesBruteForceOnPolesAAndB) {
  for (const std::string& word : Words(3)) {
    const std::vector<Multipole> blocks = Blocks(word, PoleA(), PoleB());
    absl::StatusOr<M3Result> dp = M3RingDp(blocks);
    ASSERT_TRUE(dp.ok()) << dp.status();
    absl::StatusOr<RingLayout> layout = LayOutRing(blocks);
    ASSERT_TRUE(layout.ok());
    absl::StatusOr<M3Result> brute = M3BruteForce(layout->graph);
    ASSERT_TRUE(brute.ok());
    EXPECT_EQ(dp->covered, brute->covered) << word;
    EXPECT_EQ(dp->total, brute->total) << word;
    EXPECT_TRUE(IsValidWitness(layout->graph, *dp)) << word;
  }
}

TEST(M3RingDpTest, MatchesBruteForceOnPrimedPoles) {
  for (const std::string& word : Words(2)) {
    const std::vector<Multipole> blocks =
        Blocks(word, PoleAPrime(), PoleBPrime());
    absl::StatusOr<M3Result> dp = M3RingDp(blocks);
    ASSERT_TRUE(dp.ok()) << dp.status();
    absl::StatusOr<RingLayout> layout = LayOutRing(blocks);
    ASSERT_TRUE(layout.ok());
    absl::StatusOr<M3Result> brute = M3BruteForce(layout->graph);
    ASSERT_TRUE(brute.ok()) << brute.status();
    EXPECT_EQ(dp->covered, brute->covered) << word;
    EXPECT_TRUE(IsValidWitness(layout->graph, *dp)) << word;
  }
}

TEST(M3RingDpTest, HalfUnitAccounting) {
  const std::vector<Multipole> blocks =
      Blocks("AABAB", PoleAPrime(), PoleBPrime());
  absl::StatusOr<RingLayout> layout = LayOutRing(blocks);
  ASSERT_TRUE(layout.ok());
  absl::StatusOr<M3Result> dp = M3RingDp(blocks);
  ASSERT_TRUE(dp.ok());
  EdgeSet covered = dp->witness[0];
  covered |= dp->witness[1];
  covered |= dp->witness[2];
  int half_units = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    EdgeSet local(blocks[i].edge_count());
    for (EdgeRef e = 0; e < blocks[i].edge_count(); ++e) {
      if (covered.Contains(layout->block_to_graph[i][e])) local.Insert(e);
    }
    half_units += UncoveredWeight(blocks[i], local);
  }
  EXPECT_EQ(half_units, 2 * dp->uncovered());
  EXPECT_EQ(dp->total, layout->graph.edge_count());
}

TEST(M3RingDpTest, FamilyFormulas) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 0; b <= 2; ++b) {
      absl::StatusOr<M3Result> r = M3RingDp(FamilySpec{.k = 2, .a = a, .b = b});
      ASSERT_TRUE(r.ok());
      EXPECT_EQ(r->covered, 12 * a + 6 * b);
      EXPECT_EQ(r->total, 15 * a + 6 * b);
    }
  }
  absl::StatusOr<M3Result> r = M3RingDp(FamilySpec{.k = 4, .a = 1, .b = 0});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->value().ToDisplayString(), "27/30 = 9/10");
  r = M3RingDp(FamilySpec{.k = 4, .a = 1, .b = 1});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->value().ToDisplayString(), "39/42 = 13/14");
}

TEST(M3RingDpTest, OrderInvariance) {
  for (int k : {2, 4}) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 0; a + b <= 4; ++b) {
        const Rational expected = PredictedM3({.k = k, .a = a, .b = b});
        std::string order = std::string(a, 'A') + std::string(b, 'B');
        do {
          absl::StatusOr<M3Result> r =
              M3RingDp(FamilySpec{.k = k, .a = a, .b = b, .order = order});
          ASSERT_TRUE(r.ok());
          EXPECT_EQ(r->value().num, expected.num) << k << " " << order;
          EXPECT_EQ(r->value().den, expected.den) << k << " " << order;
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
}

TEST(M3RingDpTest, ScalingInvariance) {
  for (int k : {2, 4}) {
    for (int scale = 1; scale <= 3; ++scale) {
      const FamilySpec spec{.k = k, .a = 2, .b = 1, .order = "ABA",
                            .scale = scale};
      absl::StatusOr<M3Result> r = M3RingDp(spec);
      ASSERT_TRUE(r.ok());
      EXPECT_EQ(r->value(), PredictedM3({.k = k, .a = 2, .b = 1}));
      EXPECT_EQ(r->total, scale * FamilyEdgeCount({.k = k, .a = 2, .b = 1}));
    }
  }
}

TEST(M3RingDpTest, RejectsBadBlocks) {
  EXPECT_FALSE(M3RingDp(std::vector<Multipole>{}).ok());
  EXPECT_FALSE(M3RingDp(std::vector<Multipole>{PoleA(), PoleBPrime()}).ok());
  EXPECT_FALSE(M3RingDp(std::vector<Multipole>{BlanusaBlock()}).ok());
}

TEST(ComputeM3Test, Dispatch) {
  M3Options options;
  absl::StatusOr<M3Outcome> o = ComputeM3(Petersen(), options);
  ASSERT_TRUE(o.ok());
  ASSERT_TRUE(o->brute.has_value());
  EXPECT_FALSE(o->dp.has_value());
  EXPECT_EQ(o->primary().method, M3Method::kBrute);
  EXPECT_EQ(o->primary().value().ToString(), "12/15");

  options.method = MethodChoice::kDp;
  EXPECT_FALSE(ComputeM3(Petersen(), options).ok());

  options = {.method = MethodChoice::kAuto, .cross_check = true};
  o = ComputeM3(FamilySpec{.k = 2, .a = 2, .b = 0}, options);
  ASSERT_TRUE(o.ok());
  ASSERT_TRUE(o->brute && o->dp);
  EXPECT_EQ(o->brute->value().ToDisplayString(), "24/30 = 4/5");
  EXPECT_EQ(o->dp->value().ToDisplayString(), "24/30 = 4/5");

  options = {.method = MethodChoice::kAuto, .cap = 100};
  absl::StatusOr<Graph> big = BuildFamily({.k = 2, .a = 4, .b = 0});
  ASSERT_TRUE(big.ok());
  EXPECT_FALSE(ComputeM3(*big, options).ok());
}

}  // namespace
}  // namespace m3cover
