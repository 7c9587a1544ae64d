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

// Multipoles: cubic graph fragments made of links (two vertex ends) and
// dangling edges (one vertex end), grouped into ordered connectors. A Graph is
// a multipole without dangling edges.

#ifndef M3COVER_MULTIPOLE_H_
#define M3COVER_MULTIPOLE_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "m3cover/edge_set.h"

namespace m3cover {

// Undirected link; normalized so that u <= v. u == v is a loop.
struct Link {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Link&, const Link&) = default;
};

struct Dangling {
  int vertex = 0;
  std::string label;
  friend bool operator==(const Dangling&, const Dangling&) = default;
};

// Ordered list of dangling labels forming one join interface.
using Connector = std::vector<std::string>;

class Multipole {
 public:
  Multipole() = default;
  // Links are normalized and sorted; everything else is kept as given. No
  // invariant is enforced here, see Validate().
  Multipole(std::string name, int vertex_count, std::vector<Link> links,
            std::vector<Dangling> danglings,
            std::vector<Connector> connectors);

  const std::string& name() const { return name_; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<Dangling>& danglings() const { return danglings_; }
  const std::vector<Connector>& connectors() const { return connectors_; }

  int link_count() const { return static_cast<int>(links_.size()); }
  int dangling_count() const { return static_cast<int>(danglings_.size()); }
  int edge_count() const { return link_count() + dangling_count(); }

  bool IsLink(EdgeRef e) const { return e >= 0 && e < link_count(); }
  bool IsDangling(EdgeRef e) const {
    return e >= link_count() && e < edge_count();
  }
  EdgeRef DanglingRef(int dangling_index) const {
    return link_count() + dangling_index;
  }
  int DanglingIndex(EdgeRef e) const { return e - link_count(); }

  // Index into danglings(), or nullopt.
  std::optional<int> FindDangling(std::string_view label) const;
  // First link joining u and v, or nullopt.
  std::optional<EdgeRef> FindLink(int u, int v) const;

  // Dangling indices of connector `c` in connector order. Unknown labels are
  // skipped; Validate() reports them.
  std::vector<int> ConnectorDanglings(int c) const;

  // EdgeRefs incident with each vertex, ascending. A loop appears twice.
  const std::vector<std::vector<EdgeRef>>& incidence() const {
    return incidence_;
  }
  int Degree(int v) const { return static_cast<int>(incidence_[v].size()); }

  // Human-readable edge name: "3-7" for links, "(3)f1" for dangling edges.
  std::string EdgeName(EdgeRef e) const;

  Multipole WithName(std::string name) const;
  Multipole WithConnectors(std::vector<Connector> connectors) const;

  friend bool operator==(const Multipole& a, const Multipole& b) {
    return a.vertex_count_ == b.vertex_count_ && a.links_ == b.links_ &&
           a.danglings_ == b.danglings_ && a.connectors_ == b.connectors_;
  }

 private:
  std::string name_;
  int vertex_count_ = 0;
  std::vector<Link> links_;
  std::vector<Dangling> danglings_;
  std::vector<Connector> connectors_;
  std::vector<std::vector<EdgeRef>> incidence_;
};

// A multipole with no dangling edges and no connectors.
class Graph : public Multipole {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Link> links, std::string name = "");

  static absl::StatusOr<Graph> FromMultipole(const Multipole& m);
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Lists every violated multipole invariant (degree 3 everywhere, unique
// dangling labels, well-formed connectors, endpoints in range).
ValidationReport Validate(const Multipole& m);

// Replaces link `e` by two dangling edges at its former endpoints, each in its
// own width-1 connector. Labels are "<u>" and "<v>" prefixed with `prefix`.
absl::StatusOr<Multipole> CutEdge(const Multipole& g, EdgeRef e,
                                  std::string_view prefix = "d");

// Fuses the i-th dangling edge of connector c1 of m1 with the
// permutation[i]-th dangling edge of connector c2 of m2 (identity when the
// permutation is empty). The vertices of m2 are shifted by
// m1.vertex_count(). Remaining connectors keep their order, m1's first.
// Labels of m2 that clash with m1 get primes appended.
absl::StatusOr<Multipole> Join(const Multipole& m1, int c1,
                               const Multipole& m2, int c2,
                               std::span<const int> permutation = {});

// Same as Join but both connectors belong to `m`.
absl::StatusOr<Multipole> JoinSelf(const Multipole& m, int c1, int c2,
                                   std::span<const int> permutation = {});

// The sub-multipole induced by `vertices` (renumbered in the given order).
// Links leaving the set become dangling edges labeled "<u>><v>" with the
// original vertex numbers; existing dangling edges are kept. No connectors.
Multipole InducedSubmultipole(const Multipole& m,
                              std::span<const int> vertices);

// Induced sub-multipole on the complement of `removed`.
Multipole DeleteVertices(const Multipole& m, std::span<const int> removed);

}  // namespace m3cover

#endif  // M3COVER_MULTIPOLE_H_
