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

#include "m3cover/multipole.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "fmt/core.h"

namespace m3cover {

Multipole::Multipole(std::string name, int vertex_count,
                     std::vector<Link> links, std::vector<Dangling> danglings,
                     std::vector<Connector> connectors)
    : name_(std::move(name)),
      vertex_count_(vertex_count),
      links_(std::move(links)),
      danglings_(std::move(danglings)),
      connectors_(std::move(connectors)) {
  for (Link& l : links_) {
    if (l.u > l.v) std::swap(l.u, l.v);
  }
  std::sort(links_.begin(), links_.end());
  incidence_.assign(std::max(vertex_count_, 0), {});
  auto in_range = [&](int v) { return v >= 0 && v < vertex_count_; };
  for (EdgeRef e = 0; e < link_count(); ++e) {
    const Link& l = links_[e];
    if (in_range(l.u)) incidence_[l.u].push_back(e);
    if (in_range(l.v)) incidence_[l.v].push_back(e);
  }
  for (int i = 0; i < dangling_count(); ++i) {
    if (in_range(danglings_[i].vertex)) {
      incidence_[danglings_[i].vertex].push_back(DanglingRef(i));
    }
  }
}

std::optional<int> Multipole::FindDangling(std::string_view label) const {
  for (int i = 0; i < dangling_count(); ++i) {
    if (danglings_[i].label == label) return i;
  }
  return std::nullopt;
}

std::optional<EdgeRef> Multipole::FindLink(int u, int v) const {
  const Link key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(links_.begin(), links_.end(), key);
  if (it == links_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeRef>(it - links_.begin());
}

std::vector<int> Multipole::ConnectorDanglings(int c) const {
  std::vector<int> out;
  for (const std::string& label : connectors_[c]) {
    if (auto i = FindDangling(label)) out.push_back(*i);
  }
  return out;
}

std::string Multipole::EdgeName(EdgeRef e) const {
  if (IsLink(e)) return fmt::format("{}-{}", links_[e].u, links_[e].v);
  const Dangling& d = danglings_[DanglingIndex(e)];
  return fmt::format("({}){}", d.vertex, d.label);
}

Multipole Multipole::WithName(std::string name) const {
  Multipole m = *this;
  m.name_ = std::move(name);
  return m;
}

Multipole Multipole::WithConnectors(std::vector<Connector> connectors) const {
  Multipole m = *this;
  m.connectors_ = std::move(connectors);
  return m;
}

Graph::Graph(int vertex_count, std::vector<Link> links, std::string name)
    : Multipole(std::move(name), vertex_count, std::move(links), {}, {}) {}

absl::StatusOr<Graph> Graph::FromMultipole(const Multipole& m) {
  if (m.dangling_count() != 0 || !m.connectors().empty()) {
    return absl::InvalidArgumentError(
        fmt::format("multipole '{}' still has {} dangling edges", m.name(), m.dangling_count()));
  }
  return Graph(m.vertex_count(), m.links(), m.name());
}

ValidationReport Validate(const Multipole& m) {
  ValidationReport report;
  auto& problems = report.problems;
  if (m.vertex_count() < 0) {
    problems.push_back("negative vertex count");
    return report;
  }
  for (const Link& l : m.links()) {
    if (l.u < 0 || l.v >= m.vertex_count()) {
      problems.push_back(fmt::format("link {}-{} has an endpoint out of range", l.u, l.v));
    }
  }
  std::set<std::string> labels;
  for (const Dangling& d : m.danglings()) {
    if (d.vertex < 0 || d.vertex >= m.vertex_count()) {
      problems.push_back(fmt::format("dangling edge '{}' attached to vertex out of range", d.label));
    }
    if (!labels.insert(d.label).second) {
      problems.push_back(
          fmt::format("duplicate dangling label '{}'", d.label));
    }
  }
  std::vector<int> deficient;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const int degree = m.Degree(v);
    if (degree == 3) continue;
    if (degree < 3) {
      deficient.push_back(v);
    } else {
      problems.push_back(fmt::format("vertex {} has degree {}", v, degree));
    }
  }
  if (!deficient.empty()) {
    std::string list;
    for (int v : deficient) {
      list += fmt::format("{}{}({})", list.empty() ? "" : " ", v, m.Degree(v));
    }
    problems.push_back(fmt::format("vertices of degree < 3 without enough dangling edges: {}", list));
  }
  std::set<std::string> used;
  for (size_t c = 0; c < m.connectors().size(); ++c) {
    if (m.connectors()[c].empty()) {
      problems.push_back(fmt::format("connector {} is empty", c));
    }
    for (const std::string& label : m.connectors()[c]) {
      if (!labels.contains(label)) {
        problems.push_back(fmt::format("connector {} names unknown dangling '{}'", c, label));
      }
      if (!used.insert(label).second) {
        problems.push_back(fmt::format("dangling '{}' appears in two connectors", label));
      }
    }
  }
  return report;
}

absl::StatusOr<Multipole> CutEdge(const Multipole& g, EdgeRef e,
                                  std::string_view prefix) {
  if (!g.IsLink(e)) {
    return absl::InvalidArgumentError(
        fmt::format("edge {} is not a link", e));
  }
  const Link cut = g.links()[e];
  std::vector<Link> links = g.links();
  links.erase(links.begin() + e);
  std::vector<Dangling> danglings = g.danglings();
  std::string first = fmt::format("{}{}", prefix, cut.u);
  std::string second = fmt::format("{}{}", prefix, cut.v);
  if (cut.u == cut.v) second += "'";
  danglings.push_back({cut.u, first});
  danglings.push_back({cut.v, second});
  std::vector<Connector> connectors = g.connectors();
  connectors.push_back({first});
  connectors.push_back({second});
  return Multipole(g.name(), g.vertex_count(), std::move(links),
                   std::move(danglings), std::move(connectors));
}

namespace {

absl::Status CheckConnector(const Multipole& m, int c, std::string_view who) {
  if (c < 0 || c >= static_cast<int>(m.connectors().size())) {
    return absl::InvalidArgumentError(
        fmt::format("{} has no connector {}", who, c));
  }
  if (m.ConnectorDanglings(c).size() != m.connectors()[c].size()) {
    return absl::InvalidArgumentError(
        fmt::format("{} connector {} names unknown danglings", who, c));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<int>> ResolvePermutation(
    std::span<const int> permutation, int width) {
  std::vector<int> perm(width);
  if (permutation.empty()) {
    for (int i = 0; i < width; ++i) perm[i] = i;
    return perm;
  }
  if (static_cast<int>(permutation.size()) != width) {
    return absl::InvalidArgumentError("permutation length != connector width");
  }
  std::vector<bool> seen(width, false);
  for (int i = 0; i < width; ++i) {
    const int p = permutation[i];
    if (p < 0 || p >= width || seen[p]) {
      return absl::InvalidArgumentError("argument is not a permutation");
    }
    seen[p] = true;
    perm[i] = p;
  }
  return perm;
}

// Fuses dangling pairs (indices into `danglings`) into links and drops the
// consumed connectors.
Multipole Fuse(std::string name, int vertex_count, std::vector<Link> links,
               const std::vector<Dangling>& danglings,
               const std::vector<Connector>& connectors,
               const std::vector<std::pair<int, int>>& pairs,
               const std::set<int>& consumed_connectors) {
  std::vector<bool> consumed(danglings.size(), false);
  for (auto [a, b] : pairs) {
    links.push_back({danglings[a].vertex, danglings[b].vertex});
    consumed[a] = consumed[b] = true;
  }
  std::vector<Dangling> kept;
  for (size_t i = 0; i < danglings.size(); ++i) {
    if (!consumed[i]) kept.push_back(danglings[i]);
  }
  std::vector<Connector> kept_connectors;
  for (size_t c = 0; c < connectors.size(); ++c) {
    if (!consumed_connectors.contains(static_cast<int>(c))) {
      kept_connectors.push_back(connectors[c]);
    }
  }
  return Multipole(std::move(name), vertex_count, std::move(links),
                   std::move(kept), std::move(kept_connectors));
}

}  // namespace

absl::StatusOr<Multipole> Join(const Multipole& m1, int c1,
                               const Multipole& m2, int c2,
                               std::span<const int> permutation) {
  if (absl::Status s = CheckConnector(m1, c1, "left operand"); !s.ok()) {
    return s;
  }
  if (absl::Status s = CheckConnector(m2, c2, "right operand"); !s.ok()) {
    return s;
  }
  const std::vector<int> left = m1.ConnectorDanglings(c1);
  const std::vector<int> right = m2.ConnectorDanglings(c2);
  if (left.size() != right.size()) {
    return absl::InvalidArgumentError(
        fmt::format("connector width mismatch: {} vs {}", left.size(), right.size()));
  }
  absl::StatusOr<std::vector<int>> perm =
      ResolvePermutation(permutation, static_cast<int>(left.size()));
  if (!perm.ok()) return perm.status();

  const int shift = m1.vertex_count();
  std::set<std::string> taken;
  for (const Dangling& d : m1.danglings()) taken.insert(d.label);
  std::map<std::string, std::string> rename;
  for (const Dangling& d : m2.danglings()) {
    std::string label = d.label;
    while (taken.contains(label)) label += "'";
    taken.insert(label);
    rename[d.label] = label;
  }

  std::vector<Link> links = m1.links();
  for (const Link& l : m2.links()) links.push_back({l.u + shift, l.v + shift});
  std::vector<Dangling> danglings = m1.danglings();
  for (const Dangling& d : m2.danglings()) {
    danglings.push_back({d.vertex + shift, rename[d.label]});
  }
  std::vector<Connector> connectors = m1.connectors();
  for (const Connector& c : m2.connectors()) {
    Connector renamed;
    for (const std::string& label : c) {
      auto it = rename.find(label);
      renamed.push_back(it == rename.end() ? label : it->second);
    }
    connectors.push_back(std::move(renamed));
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < left.size(); ++i) {
    pairs.emplace_back(left[i], m1.dangling_count() + right[(*perm)[i]]);
  }
  const int m2_connector = static_cast<int>(m1.connectors().size()) + c2;
  return Fuse(m1.name(), m1.vertex_count() + m2.vertex_count(),
              std::move(links), danglings, connectors, pairs,
              {c1, m2_connector});
}

absl::StatusOr<Multipole> JoinSelf(const Multipole& m, int c1, int c2,
                                   std::span<const int> permutation) {
  if (c1 == c2) {
    return absl::InvalidArgumentError("cannot join a connector with itself");
  }
  if (absl::Status s = CheckConnector(m, c1, "multipole"); !s.ok()) return s;
  if (absl::Status s = CheckConnector(m, c2, "multipole"); !s.ok()) return s;
  const std::vector<int> left = m.ConnectorDanglings(c1);
  const std::vector<int> right = m.ConnectorDanglings(c2);
  if (left.size() != right.size()) {
    return absl::InvalidArgumentError(
        fmt::format("connector width mismatch: {} vs {}", left.size(), right.size()));
  }
  absl::StatusOr<std::vector<int>> perm =
      ResolvePermutation(permutation, static_cast<int>(left.size()));
  if (!perm.ok()) return perm.status();
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(m.dangling_count(), false);
  for (size_t i = 0; i < left.size(); ++i) {
    const int a = left[i];
    const int b = right[(*perm)[i]];
    if (a == b) {
      return absl::InvalidArgumentError(
          fmt::format("dangling '{}' would be fused with itself", m.danglings()[a].label));
    }
    for (int d : {a, b}) {
      if (used[d]) {
        return absl::InvalidArgumentError(
            fmt::format("dangling '{}' would be fused twice", m.danglings()[d].label));
      }
      used[d] = true;
    }
    pairs.emplace_back(a, b);
  }
  return Fuse(m.name(), m.vertex_count(), m.links(), m.danglings(),
              m.connectors(), pairs, {c1, c2});
}

Multipole InducedSubmultipole(const Multipole& m,
                              std::span<const int> vertices) {
  std::vector<int> index(m.vertex_count(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Link> links;
  std::vector<Dangling> danglings;
  std::set<std::string> taken;
  for (const Dangling& d : m.danglings()) taken.insert(d.label);
  auto dangle = [&](int at, int from, int to) {
    std::string label = fmt::format("{}>{}", from, to);
    while (taken.contains(label)) label += "'";
    taken.insert(label);
    danglings.push_back({at, std::move(label)});
  };
  for (const Link& l : m.links()) {
    const int a = index[l.u];
    const int b = index[l.v];
    if (a >= 0 && b >= 0) {
      links.push_back({a, b});
    } else if (a >= 0) {
      dangle(a, l.u, l.v);
    } else if (b >= 0) {
      dangle(b, l.v, l.u);
    }
  }
  for (const Dangling& d : m.danglings()) {
    if (index[d.vertex] >= 0) danglings.push_back({index[d.vertex], d.label});
  }
  return Multipole(m.name(), static_cast<int>(vertices.size()),
                   std::move(links), std::move(danglings), {});
}

Multipole DeleteVertices(const Multipole& m, std::span<const int> removed) {
  std::vector<bool> gone(m.vertex_count(), false);
  for (int v : removed) gone[v] = true;
  std::vector<int> kept;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (!gone[v]) kept.push_back(v);
  }
  return InducedSubmultipole(m, kept);
}

}  // namespace m3cover
