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

// Exhaustive enumeration of perfect matchings and proper 3-edge-colourings of
// multipoles. A perfect matching may use dangling edges; loops never belong to
// one.

#ifndef M3COVER_MATCHING_H_
#define M3COVER_MATCHING_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "m3cover/edge_set.h"
#include "m3cover/multipole.h"

namespace m3cover {

using PerfectMatching = EdgeSet;

enum class Membership { kRequiredIn, kRequiredOut };

// Dangling label -> requirement. Unlisted danglings are free.
using BoundaryConstraint = std::map<std::string, Membership>;

// Returns false to stop the enumeration.
using MatchingVisitor = absl::FunctionRef<bool(const PerfectMatching&)>;

// Backtracking over vertices in index order; at each step the lowest unmatched
// vertex is matched through each admissible incident edge in EdgeRef order.
absl::Status ForEachPerfectMatching(const Multipole& m,
                                    const BoundaryConstraint& constraint,
                                    MatchingVisitor visit);

// All perfect matchings, sorted lexicographically by their ascending EdgeRef
// sequences.
std::vector<PerfectMatching> PerfectMatchings(const Multipole& m);
absl::StatusOr<std::vector<PerfectMatching>> PerfectMatchings(
    const Multipole& m, const BoundaryConstraint& constraint);

// Counts without materializing. With `limit` > 0 counting stops at limit + 1.
int64_t CountPerfectMatchings(const Multipole& m, int64_t limit = 0);

bool IsPerfectMatching(const Multipole& m, const EdgeSet& edges);

// Colours are 1, 2, 3, indexed by EdgeRef.
struct EdgeColoring {
  std::vector<int> colors;

  int operator[](EdgeRef e) const { return colors[e]; }
  EdgeSet ColorClass(int color) const;
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Dangling label -> fixed colour.
using ColorConstraint = std::map<std::string, int>;

using ColoringVisitor = absl::FunctionRef<bool(const EdgeColoring&)>;

// Every proper 3-edge-colouring extending `fixed`, each exactly once (colour
// permutations are distinct colourings). Colour class 1 ranges over the
// perfect matchings of `m`; the rest decomposes into paths and cycles that are
// 2-coloured alternately.
absl::Status ForEachEdgeColoring(const Multipole& m,
                                 const ColorConstraint& fixed,
                                 ColoringVisitor visit);

absl::StatusOr<std::vector<EdgeColoring>> EdgeColorings(
    const Multipole& m, const ColorConstraint& fixed = {});

bool Is3EdgeColorable(const Multipole& m, const ColorConstraint& fixed = {});

bool IsProperColoring(const Multipole& m, const EdgeColoring& coloring);

}  // namespace m3cover

#endif  // M3COVER_MATCHING_H_
