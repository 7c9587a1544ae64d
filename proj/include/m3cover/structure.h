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

// Structural invariants used by the verification gates: girth, cyclic edge
// connectivity, bridges and isomorphism. Links only; dangling edges are
// ignored except by AreIsomorphic.

#ifndef M3COVER_STRUCTURE_H_
#define M3COVER_STRUCTURE_H_

#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "m3cover/edge_set.h"
#include "m3cover/multipole.h"

namespace m3cover {

// Shortest cycle length; a loop counts 1, a pair of parallel links 2.
// nullopt when the multipole has no cycle.
std::optional<int> Girth(const Multipole& m);

// Length of the shortest cycle through link `e`; nullopt when `e` is a bridge
// (or not a link).
std::optional<int> ShortestCycleThrough(const Multipole& m, EdgeRef e);

// Vertex sequence of one shortest cycle through link `e`, empty when none.
std::vector<int> ShortestCycleVerticesThrough(const Multipole& m, EdgeRef e);

// Cyclic edge connectivity. `value` is nullopt when no edge cut leaves a cycle
// on both sides (for example K4 or K_{3,3}).
struct ConnectivityResult {
  std::optional<int> value;
  std::vector<EdgeRef> cut;
  // Vertices on one side of the cut; the other side is the complement.
  std::vector<int> side;
};

// Definition-level oracle: minimum over all vertex bipartitions whose two
// sides both contain a cycle. Refuses graphs above `max_vertices`.
absl::StatusOr<ConnectivityResult> CyclicConnectivityOracle(
    const Graph& g, int max_vertices = 26);

// Cycle-pair max-flow algorithm. Candidate cycles are the shortest cycles
// through each link; every vertex-disjoint pair is separated by a minimum
// edge cut between the two contracted cycles.
ConnectivityResult CyclicEdgeConnectivity(const Graph& g);

// True when `side` and its complement both induce a subgraph with a cycle.
// On success stores the crossing links in `cut`.
bool IsCycleSeparating(const Graph& g, std::span<const int> side,
                       std::vector<EdgeRef>* cut = nullptr);

bool IsConnected(const Multipole& m);

// Connected and without bridges.
bool IsBridgeless(const Graph& g);

// Exact isomorphism of multipoles, respecting link multiplicities, loops and
// the number of dangling edges at each vertex. Labels and connectors are
// ignored.
bool AreIsomorphic(const Multipole& a, const Multipole& b);

}  // namespace m3cover

#endif  // M3COVER_STRUCTURE_H_
