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

// Exact m3: the largest number of edges covered by a union of three perfect
// matchings, as a fraction of all edges. Two independent routes: brute force
// over triples of perfect matchings of the whole graph, and a min-plus
// transfer-matrix product around a ring of blocks.
//
// Uncovered weight is counted in half-units: an uncovered link weighs 2, an
// uncovered dangling edge 1 (its partner block accounts for the other half).

#ifndef M3COVER_M3_SOLVER_H_
#define M3COVER_M3_SOLVER_H_

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "m3cover/generators.h"
#include "m3cover/matching.h"
#include "m3cover/multipole.h"
#include "m3cover/rational.h"

namespace m3cover {

enum class M3Method { kBrute, kDp };
std::string_view MethodName(M3Method method);

struct M3Result {
  M3Method method = M3Method::kBrute;
  int64_t covered = 0;
  int64_t total = 0;
  // Three perfect matchings (EdgeRefs of the graph) covering `covered` edges.
  std::array<PerfectMatching, 3> witness;
  // Number of perfect matchings of the graph (brute force only).
  int64_t matching_count = -1;

  Rational value() const { return {covered, total}; }
  int64_t uncovered() const { return total - covered; }
};

inline constexpr int64_t kDefaultMatchingCap = 5000;

// Maximum over unordered triples (with repetition) of perfect matchings.
// The witness is the lexicographically smallest optimal index triple into
// PerfectMatchings(g). Fails with ResourceExhausted above `cap` matchings.
absl::StatusOr<M3Result> M3BruteForce(const Graph& g,
                                      int64_t cap = kDefaultMatchingCap);

// Three bits per dangling edge, in declaration order: bit 3t+i is set when
// matching i+1 contains dangling t.
using BoundaryState = uint32_t;

inline constexpr int kMaxProfileDanglings = 6;
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct CoverProfile {
  int dangling_count = 0;
  // Perfect matchings of the block, sorted; witnesses index into this.
  std::vector<PerfectMatching> matchings;
  // Indexed by BoundaryState; kUnreachable where no triple realizes it.
  std::vector<int> weight;
  // Matchings labeled 1, 2, 3 of a lexicographically smallest minimizer.
  std::vector<std::array<int, 3>> witness;

  bool Reachable(BoundaryState s) const { return weight[s] != kUnreachable; }
  int Min() const;
};

// Membership subset (bits 0..2 for matchings 1..3) of dangling `t`.
inline int MembershipOf(BoundaryState s, int t) { return (s >> (3 * t)) & 7; }

// 2 * (uncovered links) + (uncovered danglings) of the union of the given
// matchings of `m`.
int UncoveredWeight(const Multipole& m, const EdgeSet& covered);

// Exhaustive: every triple of perfect matchings of `m` is classified by its
// boundary state and the minimum uncovered weight per state is kept.
absl::StatusOr<CoverProfile> BlockProfile(const Multipole& m);

// Ring assembled by AssembleRing with, per block, the graph EdgeRef of each
// block EdgeRef (dangling edges map to the fused link they became).
struct RingLayout {
  Graph graph;
  std::vector<std::vector<EdgeRef>> block_to_graph;
};
absl::StatusOr<RingLayout> LayOutRing(std::span<const Multipole> blocks);

// Every block needs two connectors of a common width w (1 or 2) that together
// hold all its dangling edges. Connector 1 of block i meets connector 0 of
// block i+1, and the last block closes onto the first.
absl::StatusOr<M3Result> M3RingDp(std::span<const Multipole> blocks);
absl::StatusOr<M3Result> M3RingDp(const FamilySpec& spec);

enum class MethodChoice { kAuto, kBrute, kDp };

struct M3Options {
  MethodChoice method = MethodChoice::kAuto;
  bool cross_check = false;
  int64_t cap = kDefaultMatchingCap;
};

struct M3Outcome {
  Graph graph;
  std::optional<M3Result> brute;
  std::optional<M3Result> dp;

  // The DP result when present, else brute force.
  const M3Result& primary() const { return dp ? *dp : *brute; }
};

// A bare graph admits brute force only. With `cross_check` both routes run
// and must agree.
absl::StatusOr<M3Outcome> ComputeM3(const Graph& g, const M3Options& options);
absl::StatusOr<M3Outcome> ComputeM3(const FamilySpec& spec,
                                    const M3Options& options);

// Three perfect matchings of `g` whose union has exactly `covered` edges.
bool IsValidWitness(const Graph& g, const M3Result& result);

}  // namespace m3cover

#endif  // M3COVER_M3_SOLVER_H_
