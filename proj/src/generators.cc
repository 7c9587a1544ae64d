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

#include "m3cover/generators.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <utility>

#include "fmt/core.h"
#include "m3cover/matching.h"
#include "m3cover/structure.h"

namespace m3cover {

Graph Petersen() {
  std::vector<Link> links;
  for (int i = 0; i < 5; ++i) {
    links.push_back({i, (i + 1) % 5});
    links.push_back({i, i + 5});
    links.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(links), "petersen");
}

Graph K4() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "K4");
}

Graph Prism(int n) {
  std::vector<Link> links;
  for (int i = 0; i < n; ++i) {
    links.push_back({i, (i + 1) % n});
    links.push_back({n + i, n + (i + 1) % n});
    links.push_back({i, n + i});
  }
  return Graph(2 * n, std::move(links), fmt::format("prism{}", n));
}

Multipole PoleA() {
  const Graph p = Petersen();
  return CutEdge(p, *p.FindLink(0, 1))->WithName("A");
}

absl::StatusOr<Multipole> PoleB(const Graph& g, EdgeRef e) {
  if (!Is3EdgeColorable(g)) {
    return absl::InvalidArgumentError(
        fmt::format("graph '{}' is not 3-edge-colourable", g.name()));
  }
  absl::StatusOr<Multipole> pole = CutEdge(g, e);
  if (!pole.ok()) return pole.status();
  return pole->WithName("B");
}

Multipole PoleB() { return *PoleB(K4()); }

Multipole BlanusaBlock() {
  std::vector<Link> links;
  for (int i = 0; i < 8; ++i) links.push_back({i, (i + 1) % 8});
  links.push_back({1, 5});
  links.push_back({3, 7});
  return Multipole("blanusa", 8, std::move(links),
                   {{0, "f1"}, {2, "f2"}, {4, "f3"}, {6, "f4"}}, {});
}

Multipole PoleBPrime() {
  return BlanusaBlock().WithName("Bp").WithConnectors(
      {{"f1", "f4"}, {"f3", "f2"}});
}

std::vector<int> PoleAPrimeH1() { return {2, 3, 4, 5, 6, 7, 8, 9}; }
std::vector<int> PoleAPrimeH2() {
  return {10, 11, 12, 13, 14, 15, 16, 17};
}

namespace {

Multipole PoleAPrimeWiring() {
  std::vector<Link> links;
  // Each Blanusa copy: 8-cycle on base..base+7 with chords (1,5) and (3,7)
  // relative to base; dangling positions 0, 2, 4, 6.
  for (int base : {2, 10}) {
    for (int i = 0; i < 8; ++i) links.push_back({base + i, base + (i + 1) % 8});
    links.push_back({base + 1, base + 5});
    links.push_back({base + 3, base + 7});
  }
  for (Link l : std::initializer_list<Link>{{0, 1},
                                            {0, 4},
                                            {0, 14},
                                            {1, 2},
                                            {8, 10},
                                            {18, 19},
                                            {12, 19},
                                            {16, 18}}) {
    links.push_back(l);
  }
  return Multipole("Ap", 20, std::move(links),
                   {{1, "v1"}, {6, "v6"}, {18, "v18"}, {19, "v19"}},
                   {{"v1", "v6"}, {"v18", "v19"}});
}

}  // namespace

absl::StatusOr<Multipole> BuildPoleAPrime() {
  Multipole m = PoleAPrimeWiring();
  auto fail = [](std::string_view what) {
    return absl::InternalError(fmt::format("A' gate: {}", what));
  };
  if (ValidationReport report = Validate(m); !report.ok()) {
    return fail(report.problems.front());
  }
  if (Girth(m) != 5) return fail("girth is not 5");
  for (auto [u, v] : {std::pair{2, 3}, {3, 7}, {7, 8}, {8, 9}, {9, 2}}) {
    if (!m.FindLink(u, v)) return fail("5-cycle v2v3v7v8v9 missing");
  }
  const Multipole block = BlanusaBlock();
  const std::vector<int> removed = {0, 1};
  if (!AreIsomorphic(block, DeleteVertices(Petersen(), removed))) {
    return fail("Blanusa block is not Petersen minus two adjacent vertices");
  }
  const std::vector<int> h1 = PoleAPrimeH1();
  const std::vector<int> h2 = PoleAPrimeH2();
  if (!AreIsomorphic(InducedSubmultipole(m, h1), block)) {
    return fail("H1 is not a Blanusa block");
  }
  if (!AreIsomorphic(InducedSubmultipole(m, h2), block)) {
    return fail("H2 is not a Blanusa block");
  }
  if (Is3EdgeColorable(m)) return fail("A' is 3-edge-colourable");
  return m;
}

const Multipole& PoleAPrime() {
  static const Multipole* const pole = [] {
    absl::StatusOr<Multipole> built = BuildPoleAPrime();
    if (!built.ok()) {
      std::fprintf(stderr, "fatal: %s\n", built.status().ToString().c_str());
      std::abort();
    }
    return new Multipole(*std::move(built));
  }();
  return *pole;
}

std::string EffectiveOrder(const FamilySpec& spec) {
  if (!spec.order.empty()) return spec.order;
  return std::string(spec.a, 'A') + std::string(spec.b, 'B');
}

absl::Status ValidateFamilySpec(const FamilySpec& spec) {
  if (spec.k != 2 && spec.k != 4) {
    return absl::InvalidArgumentError("family flavour k must be 2 or 4");
  }
  if (spec.a < 1) return absl::InvalidArgumentError("a must be >= 1");
  if (spec.b < 0) return absl::InvalidArgumentError("b must be >= 0");
  if (spec.scale < 1) return absl::InvalidArgumentError("scale must be >= 1");
  if (spec.a + spec.b > 1'000'000) {
    return absl::InvalidArgumentError("family too large");
  }
  if (!spec.order.empty()) {
    const auto& o = spec.order;
    if (static_cast<int64_t>(o.size()) != spec.a + spec.b ||
        std::any_of(o.begin(), o.end(), [](char c) {
          return c != 'A' && c != 'B';
        }) ||
        std::count(o.begin(), o.end(), 'A') != spec.a) {
      return absl::InvalidArgumentError(fmt::format("order '{}' must contain exactly {} 'A' and {} 'B' characters", o, spec.a, spec.b));
    }
  }
  return absl::OkStatus();
}

int64_t FamilyEdgeCount(const FamilySpec& spec) {
  const int64_t a = spec.scale * spec.a;
  const int64_t b = spec.scale * spec.b;
  return spec.k == 2 ? 15 * a + 6 * b : 30 * a + 12 * b;
}

Rational PredictedM3(const FamilySpec& spec) {
  const int64_t a = spec.scale * spec.a;
  const int64_t b = spec.scale * spec.b;
  return spec.k == 2 ? Rational{12 * a + 6 * b, 15 * a + 6 * b}
                     : Rational{27 * a + 12 * b, 30 * a + 12 * b};
}

absl::StatusOr<std::vector<Multipole>> FamilyBlocks(const FamilySpec& spec) {
  if (absl::Status s = ValidateFamilySpec(spec); !s.ok()) return s;
  const Multipole a_block = spec.k == 2 ? PoleA() : PoleAPrime();
  const Multipole b_block = spec.k == 2 ? PoleB() : PoleBPrime();
  const std::string order = EffectiveOrder(spec);
  std::vector<Multipole> blocks;
  blocks.reserve(order.size() * spec.scale);
  for (int64_t r = 0; r < spec.scale; ++r) {
    for (char c : order) blocks.push_back(c == 'A' ? a_block : b_block);
  }
  return blocks;
}

absl::StatusOr<Graph> AssembleRing(std::span<const Multipole> blocks) {
  if (blocks.empty()) return absl::InvalidArgumentError("empty ring");
  for (const Multipole& block : blocks) {
    if (block.connectors().size() != 2) {
      return absl::InvalidArgumentError(fmt::format("ring block '{}' needs exactly two connectors", block.name()));
    }
  }
  Multipole ring = blocks[0];
  for (size_t i = 1; i < blocks.size(); ++i) {
    absl::StatusOr<Multipole> joined =
        Join(ring, static_cast<int>(ring.connectors().size()) - 1, blocks[i], 0);
    if (!joined.ok()) return joined.status();
    ring = *std::move(joined);
  }
  absl::StatusOr<Multipole> closed = JoinSelf(ring, 0, 1);
  if (!closed.ok()) return closed.status();
  return Graph::FromMultipole(*closed);
}

absl::StatusOr<Graph> BuildFamily(const FamilySpec& spec) {
  absl::StatusOr<std::vector<Multipole>> blocks = FamilyBlocks(spec);
  if (!blocks.ok()) return blocks.status();
  absl::StatusOr<Graph> g = AssembleRing(*blocks);
  if (!g.ok()) return g.status();
  if (g->link_count() != FamilyEdgeCount(spec)) {
    return absl::InternalError(fmt::format("family has {} edges, expected {}", g->link_count(), FamilyEdgeCount(spec)));
  }
  const std::string name =
      fmt::format("{}_{}_{}", spec.k == 2 ? "G" : "G4", spec.scale * spec.a, spec.scale * spec.b);
  return Graph(g->vertex_count(), g->links(), name);
}

absl::StatusOr<FamilyParams> ParamsForFraction(int k, FractionTarget t) {
  if (t.p <= 0 || t.q <= 0) {
    return absl::InvalidArgumentError("p and q must be positive");
  }
  if (t.p >= t.q) {
    return absl::InvalidArgumentError(
        fmt::format("{}/{} is not below 1", t.p, t.q));
  }
  if (k == 2) {
    if (5 * t.p < 4 * t.q) {
      return absl::InvalidArgumentError(
          fmt::format("{}/{} is below 4/5", t.p, t.q));
    }
    return FamilyParams{2 * t.q - 2 * t.p, 5 * t.p - 4 * t.q};
  }
  if (k == 4) {
    if (10 * t.p < 9 * t.q) {
      return absl::InvalidArgumentError(
          fmt::format("{}/{} is below 9/10", t.p, t.q));
    }
    return FamilyParams{4 * t.q - 4 * t.p, 10 * t.p - 9 * t.q};
  }
  return absl::InvalidArgumentError("family flavour k must be 2 or 4");
}

absl::StatusOr<IExtension> IExtend(const Graph& g, EdgeRef e1, EdgeRef e2) {
  if (!g.IsLink(e1) || !g.IsLink(e2)) {
    return absl::InvalidArgumentError("I-extension needs two links");
  }
  const int x = g.vertex_count();
  const int y = x + 1;
  std::vector<Link> links;
  for (EdgeRef e = 0; e < g.link_count(); ++e) {
    if (e != e1 && e != e2) links.push_back(g.links()[e]);
  }
  const Link l1 = g.links()[e1];
  const Link l2 = g.links()[e2];
  if (e1 == e2) {
    links.push_back({l1.u, x});
    links.push_back({x, y});
    links.push_back({y, l1.v});
  } else {
    links.push_back({l1.u, x});
    links.push_back({x, l1.v});
    links.push_back({l2.u, y});
    links.push_back({y, l2.v});
  }
  links.push_back({x, y});
  Graph out(g.vertex_count() + 2, std::move(links), g.name());
  return IExtension{out, *out.FindLink(x, y)};
}

namespace {

// Fills vertices in index order; every vertex after 0 is introduced as the
// next unused label when first chosen as a neighbour, so each output is
// connected and labeled in discovery order.
class CubicFiller {
 public:
  explicit CubicFiller(int n) : n_(n), adj_(n) {}

  void Run(std::vector<Graph>* out) {
    out_ = out;
    introduced_ = 1;
    Fill(0);
  }

 private:
  void Fill(int v) {
    if (v == n_) {
      if (introduced_ != n_) return;
      std::vector<Link> links;
      for (int u = 0; u < n_; ++u) {
        for (int w : adj_[u]) {
          if (u < w) links.push_back({u, w});
        }
      }
      out_->push_back(Graph(n_, std::move(links)));
      return;
    }
    if (v >= introduced_) return;
    const int need = 3 - static_cast<int>(adj_[v].size());
    std::vector<int> existing;
    for (int w = v + 1; w < introduced_; ++w) {
      if (adj_[w].size() < 3 &&
          std::find(adj_[v].begin(), adj_[v].end(), w) == adj_[v].end()) {
        existing.push_back(w);
      }
    }
    for (int fresh = 0; fresh <= need; ++fresh) {
      if (introduced_ + fresh > n_) break;
      Choose(v, existing, 0, need - fresh, fresh);
    }
  }

  void Choose(int v, const std::vector<int>& pool, size_t start, int left,
              int fresh) {
    if (left == 0) {
      const int first_new = introduced_;
      std::vector<int> added;
      for (int i = 0; i < fresh; ++i) added.push_back(first_new + i);
      for (int w : added) Connect(v, w);
      introduced_ += fresh;
      Fill(v + 1);
      introduced_ -= fresh;
      for (int w : added) Disconnect(v, w);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      Connect(v, pool[i]);
      Choose(v, pool, i + 1, left - 1, fresh);
      Disconnect(v, pool[i]);
    }
  }

  void Connect(int u, int w) {
    adj_[u].push_back(w);
    adj_[w].push_back(u);
  }
  void Disconnect(int u, int w) {
    adj_[u].pop_back();
    adj_[w].pop_back();
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  int introduced_ = 1;
  std::vector<Graph>* out_ = nullptr;
};

std::vector<int> CoarseInvariant(const Graph& g) {
  std::vector<int> inv = {Girth(g).value_or(0)};
  for (EdgeRef e = 0; e < g.link_count(); ++e) {
    inv.push_back(ShortestCycleThrough(g, e).value_or(0));
  }
  std::sort(inv.begin() + 1, inv.end());
  return inv;
}

}  // namespace

std::vector<Graph> ConnectedCubicGraphs(int n) {
  if (n < 4 || n % 2 != 0) return {};
  std::vector<Graph> labeled;
  CubicFiller(n).Run(&labeled);
  std::map<std::vector<int>, std::vector<size_t>> buckets;
  std::vector<Graph> unique;
  for (const Graph& g : labeled) {
    auto& bucket = buckets[CoarseInvariant(g)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](size_t i) {
      return AreIsomorphic(unique[i], g);
    });
    if (seen) continue;
    bucket.push_back(unique.size());
    unique.push_back(g);
  }
  for (size_t i = 0; i < unique.size(); ++i) {
    unique[i] = Graph(n, unique[i].links(), fmt::format("cubic{}_{}", n, i));
  }
  return unique;
}

}  // namespace m3cover
