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

// Gadgets and graph families: the Petersen graph, K4, the 2-poles A and B,
// the Blanusa block, the (2,2)-poles A' and B', and circular compositions of
// them.

#ifndef M3COVER_GENERATORS_H_
#define M3COVER_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "m3cover/multipole.h"
#include "m3cover/rational.h"

namespace m3cover {

// Outer cycle 0..4, spokes i-(i+5), inner edges (i+5)-((i+2) mod 5 + 5).
Graph Petersen();
Graph K4();
// Circular prism on 2n vertices (n = 3 is the triangular prism).
Graph Prism(int n = 3);

// Petersen with link 0-1 cut; connectors (d0), (d1).
Multipole PoleA();

// `g` with link `e` cut (EdgeRef 0 by default). Fails when `g` is not
// 3-edge-colourable.
absl::StatusOr<Multipole> PoleB(const Graph& g, EdgeRef e = 0);
Multipole PoleB();

// 8-cycle u0..u7 with chords u1u5 and u3u7; dangling edges f1, f2, f3, f4 at
// u0, u2, u4, u6. No connectors.
Multipole BlanusaBlock();

// Blanusa block with connectors (f1, f4) and (f3, f2).
Multipole PoleBPrime();

// The (2,2)-pole A' on v0..v19: Blanusa blocks H1 on v2..v9 and H2 on
// v10..v17, joined through v0, v1, v18, v19. Connectors (v1, v6) and
// (v18, v19). Returns an error if the wiring fails its structural gate
// (cubic, girth 5 with the 5-cycle v2v3v7v8v9, H1 and H2 isomorphic to the
// Blanusa block, no proper 3-edge-colouring).
absl::StatusOr<Multipole> BuildPoleAPrime();
// Gate-checked A'; aborts the process if the gate fails.
const Multipole& PoleAPrime();

// Vertex sets of the two Blanusa copies inside A'.
std::vector<int> PoleAPrimeH1();
std::vector<int> PoleAPrimeH2();

// Circular composition of copies of A and B (k = 2) or A' and B' (k = 4).
struct FamilySpec {
  int k = 2;
  int64_t a = 1;
  int64_t b = 0;
  // Block arrangement around the ring, over {'A','B'}; empty means all A
  // blocks first.
  std::string order;
  // Builds G_{scale*a, scale*b} by repeating the arrangement.
  int64_t scale = 1;
};

absl::Status ValidateFamilySpec(const FamilySpec& spec);
std::string EffectiveOrder(const FamilySpec& spec);
int64_t FamilyEdgeCount(const FamilySpec& spec);
// (4a+2b)/(5a+2b) for k = 2, (9a+4b)/(10a+4b) for k = 4, at scale 1,
// written over the edge count (unreduced).
Rational PredictedM3(const FamilySpec& spec);

// Blocks in ring order, each with connector 0 facing the previous block and
// connector 1 facing the next.
absl::StatusOr<std::vector<Multipole>> FamilyBlocks(const FamilySpec& spec);

// Chains the blocks with Join (connector 1 of block i onto connector 0 of
// block i+1) and closes the ring with JoinSelf. Block i's vertices are
// shifted by the total vertex count of the blocks before it.
absl::StatusOr<Graph> AssembleRing(std::span<const Multipole> blocks);

absl::StatusOr<Graph> BuildFamily(const FamilySpec& spec);

struct FractionTarget {
  int64_t p = 0;
  int64_t q = 1;
};

struct FamilyParams {
  int64_t a = 0;
  int64_t b = 0;
};

// k = 2: (2q-2p, 5p-4q) for 4/5 <= p/q < 1.
// k = 4: (4q-4p, 10p-9q) for 9/10 <= p/q < 1.
absl::StatusOr<FamilyParams> ParamsForFraction(int k, FractionTarget target);

struct IExtension {
  Graph graph;
  // One of the links joining the two new vertices.
  EdgeRef added = -1;
};

// Subdivides links e1 and e2 (possibly the same link) with new vertices
// n and n+1 and joins them by a new link.
absl::StatusOr<IExtension> IExtend(const Graph& g, EdgeRef e1, EdgeRef e2);

// All connected simple cubic graphs on n vertices up to isomorphism.
std::vector<Graph> ConnectedCubicGraphs(int n);

}  // namespace m3cover

#endif  // M3COVER_GENERATORS_H_
