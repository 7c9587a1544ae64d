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
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "fmt/core.h"

namespace m3cover {

namespace {

int OtherEnd(const Multipole& m, EdgeRef e, int v) {
  const Link& l = m.links()[e];
  return l.u == v ? l.v : l.u;
}

// Link-only incidence, with loops listed once.
std::vector<std::vector<EdgeRef>> LinkIncidence(const Multipole& m) {
  std::vector<std::vector<EdgeRef>> inc(m.vertex_count());
  for (EdgeRef e = 0; e < m.link_count(); ++e) {
    const Link& l = m.links()[e];
    inc[l.u].push_back(e);
    if (l.v != l.u) inc[l.v].push_back(e);
  }
  return inc;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

// Whether the links with both ends on side `which` contain a cycle.
bool SideHasCycle(const Multipole& m, const std::vector<bool>& on_side,
                  bool which) {
  DisjointSets sets(m.vertex_count());
  for (const Link& l : m.links()) {
    if (on_side[l.u] != which || on_side[l.v] != which) continue;
    if (!sets.Unite(l.u, l.v)) return true;
  }
  return false;
}

std::vector<EdgeRef> CrossingLinks(const Multipole& m,
                                   const std::vector<bool>& on_side) {
  std::vector<EdgeRef> cut;
  for (EdgeRef e = 0; e < m.link_count(); ++e) {
    if (on_side[m.links()[e].u] != on_side[m.links()[e].v]) cut.push_back(e);
  }
  return cut;
}

std::vector<int> Members(const std::vector<bool>& on_side) {
  std::vector<int> out;
  for (size_t v = 0; v < on_side.size(); ++v) {
    if (on_side[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

std::optional<int> Girth(const Multipole& m) {
  const auto& links = m.links();
  for (const Link& l : links) {
    if (l.u == l.v) return 1;
  }
  for (size_t i = 1; i < links.size(); ++i) {
    if (links[i] == links[i - 1]) return 2;
  }
  const auto inc = LinkIncidence(m);
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(m.vertex_count());
  std::vector<EdgeRef> via(m.vertex_count());
  for (int root = 0; root < m.vertex_count(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    via[root] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] >= best) break;
      for (EdgeRef e : inc[x]) {
        if (e == via[x]) continue;
        const int y = OtherEnd(m, e, x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<int> ShortestCycleVerticesThrough(const Multipole& m, EdgeRef e) {
  if (!m.IsLink(e)) return {};
  const Link target = m.links()[e];
  if (target.u == target.v) return {target.u};
  const auto inc = LinkIncidence(m);
  std::vector<int> parent(m.vertex_count(), -2);
  parent[target.u] = -1;
  std::deque<int> queue{target.u};
  while (!queue.empty() && parent[target.v] == -2) {
    const int x = queue.front();
    queue.pop_front();
    for (EdgeRef f : inc[x]) {
      if (f == e) continue;
      const int y = OtherEnd(m, f, x);
      if (parent[y] != -2) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[target.v] == -2) return {};
  std::vector<int> cycle;
  for (int x = target.v; x != -1; x = parent[x]) cycle.push_back(x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::optional<int> ShortestCycleThrough(const Multipole& m, EdgeRef e) {
  const std::vector<int> cycle = ShortestCycleVerticesThrough(m, e);
  if (cycle.empty()) return std::nullopt;
  return static_cast<int>(cycle.size());
}

bool IsCycleSeparating(const Graph& g, std::span<const int> side,
                       std::vector<EdgeRef>* cut) {
  std::vector<bool> on_side(g.vertex_count(), false);
  for (int v : side) {
    if (v < 0 || v >= g.vertex_count()) return false;
    on_side[v] = true;
  }
  if (!SideHasCycle(g, on_side, true) || !SideHasCycle(g, on_side, false)) {
    return false;
  }
  if (cut != nullptr) *cut = CrossingLinks(g, on_side);
  return true;
}

absl::StatusOr<ConnectivityResult> CyclicConnectivityOracle(
    const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    return absl::InvalidArgumentError(fmt::format("oracle limited to {} vertices, graph has {}", max_vertices, n));
  }
  ConnectivityResult result;
  if (n < 2) return result;
  // Non-loop neighbour lists with multiplicity.
  std::vector<std::vector<int>> nbr(n);
  for (const Link& l : g.links()) {
    if (l.u == l.v) continue;
    nbr[l.u].push_back(l.v);
    nbr[l.v].push_back(l.u);
  }
  // Vertex n-1 stays on the complement side; subsets of the remaining n-1
  // vertices are visited in Gray-code order with an incrementally updated cut.
  std::vector<bool> in_s(n, false);
  int cut = 0;
  int best = std::numeric_limits<int>::max();
  std::vector<bool> best_side;
  const uint64_t total = uint64_t{1} << (n - 1);
  for (uint64_t step = 1; step < total; ++step) {
    const int v = std::countr_zero(step);
    in_s[v] = !in_s[v];
    for (int w : nbr[v]) cut += (in_s[w] != in_s[v]) ? 1 : -1;
    if (cut >= best) continue;
    if (SideHasCycle(g, in_s, true) && SideHasCycle(g, in_s, false)) {
      best = cut;
      best_side = in_s;
    }
  }
  if (best_side.empty()) return result;
  result.value = best;
  result.cut = CrossingLinks(g, best_side);
  result.side = Members(best_side);
  return result;
}

namespace {

// Unit-capacity max flow between two disjoint vertex sets of an undirected
// multigraph, stopping once `cap` units have been routed. Fills `source_side`
// with the vertices reachable from the sources in the final residual graph.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : g_(g), inc_(LinkIncidence(g)) {}

  int Run(const std::vector<int>& sources, const std::vector<int>& sinks,
          int cap, std::vector<bool>* source_side) {
    const int n = g_.vertex_count();
    // flow_[e] is +1 when one unit goes u->v, -1 for v->u.
    flow_.assign(g_.link_count(), 0);
    std::vector<char> is_sink(n, 0);
    for (int t : sinks) is_sink[t] = 1;
    int value = 0;
    std::vector<EdgeRef> via(n);
    std::vector<int> seen(n);
    while (value < cap) {
      std::fill(seen.begin(), seen.end(), 0);
      std::deque<int> queue;
      for (int s : sources) {
        seen[s] = 1;
        via[s] = -1;
        queue.push_back(s);
      }
      int reached = -1;
      while (!queue.empty() && reached < 0) {
        const int x = queue.front();
        queue.pop_front();
        for (EdgeRef e : inc_[x]) {
          const int y = OtherEnd(g_, e, x);
          if (y == x || seen[y] || Residual(e, x) <= 0) continue;
          seen[y] = 1;
          via[y] = e;
          if (is_sink[y]) {
            reached = y;
            break;
          }
          queue.push_back(y);
        }
      }
      if (reached < 0) {
        if (source_side != nullptr) {
          source_side->assign(n, false);
          for (int v = 0; v < n; ++v) (*source_side)[v] = seen[v] != 0;
        }
        return value;
      }
      for (int y = reached; via[y] >= 0;) {
        const EdgeRef e = via[y];
        const int x = OtherEnd(g_, e, y);
        flow_[e] += g_.links()[e].u == x ? 1 : -1;
        y = x;
      }
      ++value;
    }
    return value;
  }

 private:
  int Residual(EdgeRef e, int from) const {
    const int dir = g_.links()[e].u == from ? 1 : -1;
    return 1 - dir * flow_[e];
  }

  const Graph& g_;
  std::vector<std::vector<EdgeRef>> inc_;
  std::vector<int> flow_;
};

}  // namespace

ConnectivityResult CyclicEdgeConnectivity(const Graph& g) {
  const int n = g.vertex_count();
  std::set<std::vector<int>> seen_sets;
  std::vector<std::vector<int>> cycles;
  for (EdgeRef e = 0; e < g.link_count(); ++e) {
    std::vector<int> cycle = ShortestCycleVerticesThrough(g, e);
    if (cycle.empty()) continue;
    std::sort(cycle.begin(), cycle.end());
    if (seen_sets.insert(cycle).second) cycles.push_back(std::move(cycle));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() < b.size();
                   });

  int best = std::numeric_limits<int>::max();
  std::vector<bool> best_side;
  // Upper bound: the cut around each candidate cycle.
  for (const auto& cycle : cycles) {
    std::vector<bool> on_side(n, false);
    for (int v : cycle) on_side[v] = true;
    if (!SideHasCycle(g, on_side, false)) continue;
    const int size = static_cast<int>(CrossingLinks(g, on_side).size());
    if (size < best) {
      best = size;
      best_side = on_side;
    }
  }

  UnitFlow flow(g);
  std::vector<bool> mark(n);
  for (size_t i = 0; i < cycles.size(); ++i) {
    std::fill(mark.begin(), mark.end(), false);
    for (int v : cycles[i]) mark[v] = true;
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      const bool disjoint = std::none_of(cycles[j].begin(), cycles[j].end(),
                                         [&](int v) { return mark[v]; });
      if (!disjoint) continue;
      std::vector<bool> side;
      const int value = flow.Run(cycles[i], cycles[j], best, &side);
      if (value < best) {
        best = value;
        best_side = std::move(side);
      }
    }
  }

  ConnectivityResult result;
  if (best_side.empty()) return result;
  result.value = best;
  result.cut = CrossingLinks(g, best_side);
  result.side = Members(best_side);
  return result;
}

bool IsConnected(const Multipole& m) {
  const int n = m.vertex_count();
  if (n == 0) return true;
  DisjointSets sets(n);
  int components = n;
  for (const Link& l : m.links()) {
    if (sets.Unite(l.u, l.v)) --components;
  }
  return components == 1;
}

bool IsBridgeless(const Graph& g) {
  if (!IsConnected(g)) return false;
  const int n = g.vertex_count();
  const auto inc = LinkIncidence(g);
  std::vector<int> order(n, -1);
  std::vector<int> low(n, 0);
  int clock = 0;
  bool bridge = false;
  // Iterative DFS; the tree edge is skipped by id so parallel links count.
  struct Frame {
    int v;
    EdgeRef parent_edge;
    size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n && !bridge; ++root) {
    if (order[root] >= 0) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < inc[f.v].size()) {
        const EdgeRef e = inc[f.v][f.next++];
        if (e == f.parent_edge) continue;
        const int w = OtherEnd(g, e, f.v);
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > order[parent.v]) bridge = true;
      }
    }
  }
  return !bridge;
}

namespace {

struct IsoData {
  int n = 0;
  std::vector<std::vector<int>> mult;  // link multiplicity; loops on diagonal
  std::vector<std::vector<int>> nbr;   // distinct neighbours
  std::vector<std::vector<int>> invariant;
};

IsoData Prepare(const Multipole& m) {
  IsoData d;
  d.n = m.vertex_count();
  d.mult.assign(d.n, std::vector<int>(d.n, 0));
  d.nbr.assign(d.n, {});
  for (const Link& l : m.links()) {
    ++d.mult[l.u][l.v];
    if (l.u != l.v) ++d.mult[l.v][l.u];
  }
  for (int u = 0; u < d.n; ++u) {
    for (int v = 0; v < d.n; ++v) {
      if (v != u && d.mult[u][v] > 0) d.nbr[u].push_back(v);
    }
  }
  std::vector<int> dangling(d.n, 0);
  for (const Dangling& x : m.danglings()) ++dangling[x.vertex];
  // Invariant: own degree data, then for every distance the number of
  // vertices and the number of dangling edges found at that distance.
  d.invariant.assign(d.n, {});
  std::vector<int> dist(d.n);
  for (int r = 0; r < d.n; ++r) {
    std::vector<int>& inv = d.invariant[r];
    inv = {m.Degree(r), dangling[r], d.mult[r][r]};
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    std::deque<int> queue{r};
    std::vector<int> layer_count;
    std::vector<int> layer_dangling;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (static_cast<int>(layer_count.size()) <= dist[x]) {
        layer_count.push_back(0);
        layer_dangling.push_back(0);
      }
      ++layer_count[dist[x]];
      layer_dangling[dist[x]] += dangling[x];
      for (int y : d.nbr[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    inv.insert(inv.end(), layer_count.begin(), layer_count.end());
    inv.push_back(-1);
    inv.insert(inv.end(), layer_dangling.begin(), layer_dangling.end());
  }
  return d;
}

class IsoSearch {
 public:
  IsoSearch(const IsoData& a, const IsoData& b) : a_(a), b_(b) {
    // Visit order: BFS per component, starting from rarest invariants.
    std::vector<bool> placed(a_.n, false);
    std::vector<int> starts(a_.n);
    std::iota(starts.begin(), starts.end(), 0);
    for (int s : starts) {
      if (placed[s]) continue;
      placed[s] = true;
      std::deque<int> queue{s};
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        order_.push_back(x);
        for (int y : a_.nbr[x]) {
          if (!placed[y]) {
            placed[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    anchor_.assign(a_.n, -1);
    std::vector<int> position(a_.n);
    for (int i = 0; i < a_.n; ++i) position[order_[i]] = i;
    for (int i = 0; i < a_.n; ++i) {
      for (int y : a_.nbr[order_[i]]) {
        if (position[y] < i) {
          anchor_[i] = y;
          break;
        }
      }
    }
    map_.assign(a_.n, -1);
    used_.assign(b_.n, false);
  }

  bool Run(int i) {
    if (i == a_.n) return true;
    const int x = order_[i];
    auto try_candidate = [&](int y) {
      if (used_[y] || a_.invariant[x] != b_.invariant[y]) return false;
      for (int j = 0; j < i; ++j) {
        const int px = order_[j];
        if (a_.mult[x][px] != b_.mult[y][map_[px]]) return false;
      }
      map_[x] = y;
      used_[y] = true;
      if (Run(i + 1)) return true;
      map_[x] = -1;
      used_[y] = false;
      return false;
    };
    if (anchor_[i] >= 0) {
      for (int y : b_.nbr[map_[anchor_[i]]]) {
        if (try_candidate(y)) return true;
      }
      return false;
    }
    for (int y = 0; y < b_.n; ++y) {
      if (try_candidate(y)) return true;
    }
    return false;
  }

 private:
  const IsoData& a_;
  const IsoData& b_;
  std::vector<int> order_;
  std::vector<int> anchor_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

bool AreIsomorphic(const Multipole& a, const Multipole& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.link_count() != b.link_count() ||
      a.dangling_count() != b.dangling_count()) {
    return false;
  }
  const IsoData da = Prepare(a);
  const IsoData db = Prepare(b);
  std::multiset<std::vector<int>> ia(da.invariant.begin(), da.invariant.end());
  std::multiset<std::vector<int>> ib(db.invariant.begin(), db.invariant.end());
  if (ia != ib) return false;
  IsoSearch search(da, db);
  return search.Run(0);
}

}  // namespace m3cover
