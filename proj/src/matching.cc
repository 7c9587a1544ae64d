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
#include <utility>

#include "fmt/core.h"

namespace m3cover {

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const Multipole& m, std::vector<bool> allowed,
                 MatchingVisitor visit)
      : m_(m),
        allowed_(std::move(allowed)),
        visit_(visit),
        matched_(m.vertex_count(), false),
        current_(m.edge_count()) {}

  void Force(EdgeRef e) {
    current_.Insert(e);
    matched_[m_.danglings()[m_.DanglingIndex(e)].vertex] = true;
  }

  // Returns false once the visitor asked to stop.
  bool Run(int from) {
    int v = from;
    while (v < m_.vertex_count() && matched_[v]) ++v;
    if (v == m_.vertex_count()) return visit_(current_);
    matched_[v] = true;
    EdgeRef previous = -1;
    for (EdgeRef e : m_.incidence()[v]) {
      if (e == previous || !allowed_[e]) continue;
      previous = e;
      int other = -1;
      if (m_.IsLink(e)) {
        const Link& l = m_.links()[e];
        if (l.u == l.v) continue;
        other = l.u == v ? l.v : l.u;
        if (matched_[other]) continue;
        matched_[other] = true;
      }
      current_.Insert(e);
      const bool keep_going = Run(v + 1);
      current_.Erase(e);
      if (other >= 0) matched_[other] = false;
      if (!keep_going) {
        matched_[v] = false;
        return false;
      }
    }
    matched_[v] = false;
    return true;
  }

 private:
  const Multipole& m_;
  std::vector<bool> allowed_;
  MatchingVisitor visit_;
  std::vector<bool> matched_;
  EdgeSet current_;
};

}  // namespace

absl::Status ForEachPerfectMatching(const Multipole& m,
                                    const BoundaryConstraint& constraint,
                                    MatchingVisitor visit) {
  std::vector<bool> allowed(m.edge_count(), true);
  std::vector<EdgeRef> forced;
  for (const auto& [label, membership] : constraint) {
    std::optional<int> index = m.FindDangling(label);
    if (!index) {
      return absl::InvalidArgumentError(
          fmt::format("constraint names unknown dangling '{}'", label));
    }
    if (membership == Membership::kRequiredOut) {
      allowed[m.DanglingRef(*index)] = false;
    } else {
      forced.push_back(m.DanglingRef(*index));
    }
  }
  std::vector<bool> seen(m.vertex_count(), false);
  for (EdgeRef e : forced) {
    const int v = m.danglings()[m.DanglingIndex(e)].vertex;
    if (seen[v]) return absl::OkStatus();
    seen[v] = true;
  }
  MatchingSearch search(m, std::move(allowed), visit);
  for (EdgeRef e : forced) search.Force(e);
  search.Run(0);
  return absl::OkStatus();
}

namespace {

void SortMatchings(std::vector<PerfectMatching>* matchings) {
  std::vector<std::pair<std::vector<EdgeRef>, size_t>> keyed;
  keyed.reserve(matchings->size());
  for (size_t i = 0; i < matchings->size(); ++i) {
    keyed.emplace_back((*matchings)[i].ToVector(), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<PerfectMatching> sorted;
  sorted.reserve(matchings->size());
  for (const auto& [key, i] : keyed) sorted.push_back((*matchings)[i]);
  *matchings = std::move(sorted);
}

}  // namespace

absl::StatusOr<std::vector<PerfectMatching>> PerfectMatchings(
    const Multipole& m, const BoundaryConstraint& constraint) {
  std::vector<PerfectMatching> out;
  absl::Status status =
      ForEachPerfectMatching(m, constraint, [&](const PerfectMatching& pm) {
        out.push_back(pm);
        return true;
      });
  if (!status.ok()) return status;
  SortMatchings(&out);
  return out;
}

std::vector<PerfectMatching> PerfectMatchings(const Multipole& m) {
  return *PerfectMatchings(m, BoundaryConstraint{});
}

int64_t CountPerfectMatchings(const Multipole& m, int64_t limit) {
  int64_t count = 0;
  ForEachPerfectMatching(m, {}, [&](const PerfectMatching&) {
    ++count;
    return limit <= 0 || count <= limit;
  }).IgnoreError();
  return count;
}

bool IsPerfectMatching(const Multipole& m, const EdgeSet& edges) {
  if (edges.capacity() != m.edge_count()) return false;
  std::vector<int> hits(m.vertex_count(), 0);
  for (EdgeRef e : edges.ToVector()) {
    if (m.IsLink(e)) {
      const Link& l = m.links()[e];
      if (l.u == l.v) return false;
      ++hits[l.u];
      ++hits[l.v];
    } else {
      ++hits[m.danglings()[m.DanglingIndex(e)].vertex];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

EdgeSet EdgeColoring::ColorClass(int color) const {
  EdgeSet out(static_cast<int>(colors.size()));
  for (size_t e = 0; e < colors.size(); ++e) {
    if (colors[e] == color) out.Insert(static_cast<EdgeRef>(e));
  }
  return out;
}

namespace {

// An alternating path or cycle of the complement of colour class 1, listed in
// traversal order. Colour 2 goes to even positions in the base orientation.
struct Strand {
  std::vector<EdgeRef> edges;
};

// Splits E(m) \ matching into strands, or returns false when an odd cycle
// makes 2-colouring impossible.
bool DecomposeComplement(const Multipole& m, const EdgeSet& matching,
                         std::vector<Strand>* strands) {
  const int edge_count = m.edge_count();
  std::vector<bool> done(edge_count, false);
  // The other complement edge at vertex v, different from `via`.
  auto next_at = [&](int v, EdgeRef via) {
    for (EdgeRef e : m.incidence()[v]) {
      if (e != via && !matching.Contains(e)) return e;
    }
    return EdgeRef{-1};
  };
  auto far_end = [&](EdgeRef e, int from) {
    if (!m.IsLink(e)) return -1;
    const Link& l = m.links()[e];
    return l.u == from ? l.v : l.u;
  };
  // Paths start and end at dangling edges.
  for (int i = 0; i < m.dangling_count(); ++i) {
    const EdgeRef start = m.DanglingRef(i);
    if (done[start] || matching.Contains(start)) continue;
    Strand strand{{start}};
    done[start] = true;
    int v = m.danglings()[i].vertex;
    EdgeRef via = start;
    while (true) {
      const EdgeRef next = next_at(v, via);
      if (next < 0) return false;
      strand.edges.push_back(next);
      done[next] = true;
      if (!m.IsLink(next)) break;
      v = far_end(next, v);
      via = next;
    }
    strands->push_back(std::move(strand));
  }
  for (EdgeRef start = 0; start < m.link_count(); ++start) {
    if (done[start] || matching.Contains(start)) continue;
    Strand strand{{start}};
    done[start] = true;
    int v = m.links()[start].v;
    EdgeRef via = start;
    while (true) {
      const EdgeRef next = next_at(v, via);
      if (next < 0 || !m.IsLink(next)) return false;
      if (next == start) break;
      strand.edges.push_back(next);
      done[next] = true;
      v = far_end(next, v);
      via = next;
    }
    if (strand.edges.size() % 2 != 0) return false;
    strands->push_back(std::move(strand));
  }
  return true;
}

}  // namespace

absl::Status ForEachEdgeColoring(const Multipole& m,
                                 const ColorConstraint& fixed,
                                 ColoringVisitor visit) {
  BoundaryConstraint first_class;
  std::vector<int> fixed_color(m.edge_count(), 0);
  for (const auto& [label, color] : fixed) {
    std::optional<int> index = m.FindDangling(label);
    if (!index) {
      return absl::InvalidArgumentError(
          fmt::format("constraint names unknown dangling '{}'", label));
    }
    if (color < 1 || color > 3) {
      return absl::InvalidArgumentError(
          fmt::format("colour {} outside 1..3", color));
    }
    fixed_color[m.DanglingRef(*index)] = color;
    first_class[label] =
        color == 1 ? Membership::kRequiredIn : Membership::kRequiredOut;
  }
  for (const Link& l : m.links()) {
    if (l.u == l.v) return absl::OkStatus();
  }
  return ForEachPerfectMatching(
      m, first_class, [&](const PerfectMatching& matching) {
        std::vector<Strand> strands;
        if (!DecomposeComplement(m, matching, &strands)) return true;
        // Per strand: bit 0 = base orientation allowed, bit 1 = flipped.
        std::vector<int> options(strands.size(), 3);
        for (size_t s = 0; s < strands.size(); ++s) {
          const auto& edges = strands[s].edges;
          for (size_t i = 0; i < edges.size(); ++i) {
            const int want = fixed_color[edges[i]];
            if (want == 0) continue;
            const int base = i % 2 == 0 ? 2 : 3;
            if (want != base) options[s] &= ~1;
            if (want != 5 - base) options[s] &= ~2;
          }
          if (options[s] == 0) return true;
        }
        EdgeColoring coloring;
        coloring.colors.assign(m.edge_count(), 1);
        std::vector<int> choice(strands.size(), 0);
        std::vector<size_t> free;
        for (size_t s = 0; s < strands.size(); ++s) {
          if (options[s] == 3) {
            free.push_back(s);
          } else {
            choice[s] = (options[s] & 1) ? 0 : 1;
          }
        }
        while (true) {
          for (size_t s = 0; s < strands.size(); ++s) {
            const auto& edges = strands[s].edges;
            for (size_t i = 0; i < edges.size(); ++i) {
              const int base = i % 2 == 0 ? 2 : 3;
              coloring.colors[edges[i]] = choice[s] == 0 ? base : 5 - base;
            }
          }
          if (!visit(coloring)) return false;
          // Binary increment over the strands that admit both orientations.
          size_t k = 0;
          while (k < free.size() && choice[free[k]] == 1) choice[free[k++]] = 0;
          if (k == free.size()) return true;
          choice[free[k]] = 1;
        }
      });
}

absl::StatusOr<std::vector<EdgeColoring>> EdgeColorings(
    const Multipole& m, const ColorConstraint& fixed) {
  std::vector<EdgeColoring> out;
  absl::Status status = ForEachEdgeColoring(m, fixed, [&](const EdgeColoring& c) {
    out.push_back(c);
    return true;
  });
  if (!status.ok()) return status;
  return out;
}

bool Is3EdgeColorable(const Multipole& m, const ColorConstraint& fixed) {
  bool found = false;
  ForEachEdgeColoring(m, fixed, [&](const EdgeColoring&) {
    found = true;
    return false;
  }).IgnoreError();
  return found;
}

bool IsProperColoring(const Multipole& m, const EdgeColoring& coloring) {
  if (static_cast<int>(coloring.colors.size()) != m.edge_count()) return false;
  for (int v = 0; v < m.vertex_count(); ++v) {
    int seen = 0;
    for (EdgeRef e : m.incidence()[v]) {
      const int c = coloring[e];
      if (c < 1 || c > 3 || (seen & (1 << c))) return false;
      seen |= 1 << c;
    }
  }
  return true;
}

}  // namespace m3cover
