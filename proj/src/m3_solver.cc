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
#include <bit>
#include <utility>

#include "absl/status/status.h"
#include "fmt/core.h"

namespace m3cover {

std::string_view MethodName(M3Method method) {
  return method == M3Method::kBrute ? "brute" : "dp";
}

absl::StatusOr<M3Result> M3BruteForce(const Graph& g, int64_t cap) {
  const int64_t count = CountPerfectMatchings(g, cap);
  if (count > cap) {
    return absl::ResourceExhaustedError(
        fmt::format("more than {} perfect matchings; use the ring DP or raise the cap", cap));
  }
  const std::vector<PerfectMatching> pm = PerfectMatchings(g);
  if (pm.empty()) {
    return absl::InvalidArgumentError("graph has no perfect matching");
  }
  const int n = static_cast<int>(pm.size());
  const int total = g.edge_count();
  const int size = g.vertex_count() / 2;
  int best = -1;
  std::array<int, 3> arg = {0, 0, 0};
  // Strict improvement only, so the first optimum in lexicographic order
  // wins ties.
  for (int i = 0; i < n && best < total; ++i) {
    if (3 * size <= best) break;
    for (int j = i; j < n && best < total; ++j) {
      const int pair = pm[i].UnionCount(pm[j]);
      if (pair + size <= best) continue;
      for (int k = j; k < n; ++k) {
        const int c = pm[i].UnionCount(pm[j], pm[k]);
        if (c > best) {
          best = c;
          arg = {i, j, k};
          if (best == total || best == pair + size) break;
        }
      }
    }
  }
  M3Result result;
  result.method = M3Method::kBrute;
  result.covered = best;
  result.total = total;
  result.matching_count = n;
  for (int t = 0; t < 3; ++t) result.witness[t] = pm[arg[t]];
  return result;
}

int CoverProfile::Min() const {
  return *std::min_element(weight.begin(), weight.end());
}

int UncoveredWeight(const Multipole& m, const EdgeSet& covered) {
  int weight = 0;
  for (EdgeRef e = 0; e < m.edge_count(); ++e) {
    if (!covered.Contains(e)) weight += m.IsLink(e) ? 2 : 1;
  }
  return weight;
}

namespace {

// Places bit t of `mask` at bit 3t.
BoundaryState Spread(uint32_t mask) {
  BoundaryState s = 0;
  for (int t = 0; mask != 0; ++t, mask >>= 1) {
    if (mask & 1) s |= BoundaryState{1} << (3 * t);
  }
  return s;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

absl::StatusOr<CoverProfile> BlockProfile(const Multipole& m) {
  const int d = m.dangling_count();
  if (d > kMaxProfileDanglings) {
    return absl::InvalidArgumentError(fmt::format("block has {} dangling edges, at most {} supported", d, kMaxProfileDanglings));
  }
  CoverProfile profile;
  profile.dangling_count = d;
  profile.matchings = PerfectMatchings(m);
  const auto& pm = profile.matchings;
  const int n = static_cast<int>(pm.size());
  const size_t states = size_t{1} << (3 * d);
  profile.weight.assign(states, kUnreachable);
  profile.witness.assign(states, {-1, -1, -1});
  if (n == 0) {
    return absl::InvalidArgumentError(
        fmt::format("block '{}' has no perfect matching", m.name()));
  }

  // Word-level masks: links and danglings of the block.
  const int words = static_cast<int>(pm[0].words().size());
  std::vector<uint64_t> link_mask(words, 0);
  for (EdgeRef e = 0; e < m.link_count(); ++e) {
    link_mask[e >> 6] |= uint64_t{1} << (e & 63);
  }
  std::vector<BoundaryState> spread(n);
  for (int i = 0; i < n; ++i) {
    uint32_t mask = 0;
    for (int t = 0; t < d; ++t) {
      if (pm[i].Contains(m.DanglingRef(t))) mask |= 1u << t;
    }
    spread[i] = Spread(mask);
  }
  const int full = 2 * m.link_count() + d;

  for (int i = 0; i < n; ++i) {
    const auto& wi = pm[i].words();
    for (int j = i; j < n; ++j) {
      const auto& wj = pm[j].words();
      for (int k = j; k < n; ++k) {
        const auto& wk = pm[k].words();
        int all = 0;
        int links = 0;
        for (int w = 0; w < words; ++w) {
          const uint64_t u = wi[w] | wj[w] | wk[w];
          all += std::popcount(u);
          links += std::popcount(u & link_mask[w]);
        }
        // Each covered link saves 2, each covered dangling 1.
        const int weight = full - all - links;
        const std::array<int, 3> idx = {i, j, k};
        for (const auto& p : kPermutations) {
          const std::array<int, 3> labeled = {idx[p[0]], idx[p[1]], idx[p[2]]};
          const BoundaryState s = spread[labeled[0]] | (spread[labeled[1]] << 1) |
                                  (spread[labeled[2]] << 2);
          if (weight < profile.weight[s] ||
              (weight == profile.weight[s] && labeled < profile.witness[s])) {
            profile.weight[s] = weight;
            profile.witness[s] = labeled;
          }
        }
      }
    }
  }
  return profile;
}

absl::StatusOr<RingLayout> LayOutRing(std::span<const Multipole> blocks) {
  absl::StatusOr<Graph> graph = AssembleRing(blocks);
  if (!graph.ok()) return graph.status();
  RingLayout layout;
  layout.graph = *std::move(graph);
  const Graph& g = layout.graph;
  const int n = static_cast<int>(blocks.size());
  std::vector<int> offset(n, 0);
  for (int i = 1; i < n; ++i) {
    offset[i] = offset[i - 1] + blocks[i - 1].vertex_count();
  }
  auto lookup = [&](int u, int v) -> absl::StatusOr<EdgeRef> {
    std::optional<EdgeRef> e = g.FindLink(u, v);
    if (!e) {
      return absl::InternalError(
          fmt::format("ring link {}-{} not found", u, v));
    }
    return *e;
  };
  layout.block_to_graph.resize(n);
  for (int i = 0; i < n; ++i) {
    const Multipole& block = blocks[i];
    auto& map = layout.block_to_graph[i];
    map.assign(block.edge_count(), -1);
    for (EdgeRef e = 0; e < block.link_count(); ++e) {
      const Link& l = block.links()[e];
      absl::StatusOr<EdgeRef> ge = lookup(l.u + offset[i], l.v + offset[i]);
      if (!ge.ok()) return ge.status();
      map[e] = *ge;
    }
    const int next = (i + 1) % n;
    const int prev = (i + n - 1) % n;
    const std::vector<int> left = block.ConnectorDanglings(0);
    const std::vector<int> right = block.ConnectorDanglings(1);
    const std::vector<int> next_left = blocks[next].ConnectorDanglings(0);
    const std::vector<int> prev_right = blocks[prev].ConnectorDanglings(1);
    for (size_t j = 0; j < right.size(); ++j) {
      absl::StatusOr<EdgeRef> ge =
          lookup(block.danglings()[right[j]].vertex + offset[i],
                 blocks[next].danglings()[next_left[j]].vertex + offset[next]);
      if (!ge.ok()) return ge.status();
      map[block.DanglingRef(right[j])] = *ge;
    }
    for (size_t j = 0; j < left.size(); ++j) {
      absl::StatusOr<EdgeRef> ge =
          lookup(block.danglings()[left[j]].vertex + offset[i],
                 blocks[prev].danglings()[prev_right[j]].vertex + offset[prev]);
      if (!ge.ok()) return ge.status();
      map[block.DanglingRef(left[j])] = *ge;
    }
  }
  return layout;
}

namespace {

// Min-plus transfer matrix of one block: rows are connector-0 states,
// columns connector-1 states, each 3w bits in connector order.
struct Transfer {
  int side = 0;  // 8^w
  std::vector<int> weight;
  std::vector<std::array<int, 3>> witness;
  const CoverProfile* profile = nullptr;

  int At(int l, int r) const { return weight[l * side + r]; }
};

absl::StatusOr<Transfer> MakeTransfer(const Multipole& block,
                                      const CoverProfile& profile, int width) {
  Transfer t;
  t.side = 1 << (3 * width);
  t.weight.assign(t.side * t.side, kUnreachable);
  t.witness.assign(t.side * t.side, {-1, -1, -1});
  t.profile = &profile;
  const std::vector<int> left = block.ConnectorDanglings(0);
  const std::vector<int> right = block.ConnectorDanglings(1);
  for (BoundaryState s = 0; s < profile.weight.size(); ++s) {
    if (!profile.Reachable(s)) continue;
    int l = 0;
    int r = 0;
    for (int j = 0; j < width; ++j) {
      l |= MembershipOf(s, left[j]) << (3 * j);
      r |= MembershipOf(s, right[j]) << (3 * j);
    }
    t.weight[l * t.side + r] = profile.weight[s];
    t.witness[l * t.side + r] = profile.witness[s];
  }
  return t;
}

int AddWeights(int a, int b) {
  return (a == kUnreachable || b == kUnreachable) ? kUnreachable : a + b;
}

}  // namespace

absl::StatusOr<M3Result> M3RingDp(std::span<const Multipole> blocks) {
  if (blocks.empty()) return absl::InvalidArgumentError("empty ring");
  const int n = static_cast<int>(blocks.size());
  const int width =
      blocks[0].connectors().empty()
          ? 0
          : static_cast<int>(blocks[0].connectors()[0].size());
  if (width < 1 || width > 2) {
    return absl::InvalidArgumentError("connector width must be 1 or 2");
  }
  for (const Multipole& block : blocks) {
    if (block.connectors().size() != 2 ||
        static_cast<int>(block.ConnectorDanglings(0).size()) != width ||
        static_cast<int>(block.ConnectorDanglings(1).size()) != width ||
        block.dangling_count() != 2 * width) {
      return absl::InvalidArgumentError(fmt::format("block '{}' does not have two width-{} connectors covering all of its dangling edges", block.name(), width));
    }
  }

  // One profile per distinct block.
  std::vector<int> prototype(n);
  std::vector<CoverProfile> profiles;
  std::vector<Transfer> transfers;
  std::vector<int> distinct;
  profiles.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto it = std::find_if(distinct.begin(), distinct.end(),
                           [&](int j) { return blocks[j] == blocks[i]; });
    if (it != distinct.end()) {
      prototype[i] = prototype[*it];
      continue;
    }
    absl::StatusOr<CoverProfile> profile = BlockProfile(blocks[i]);
    if (!profile.ok()) return profile.status();
    prototype[i] = static_cast<int>(profiles.size());
    distinct.push_back(i);
    profiles.push_back(*std::move(profile));
  }
  for (size_t p = 0; p < profiles.size(); ++p) {
    absl::StatusOr<Transfer> t =
        MakeTransfer(blocks[distinct[p]], profiles[p], width);
    if (!t.ok()) return t.status();
    transfers.push_back(*std::move(t));
  }
  const int side = transfers[0].side;

  // For every start state s (connector 0 of block 0), propagate around the
  // ring and close on the same state.
  int best = kUnreachable;
  int best_start = -1;
  std::vector<std::vector<int>> best_back;
  std::vector<int> dist(side);
  std::vector<int> next(side);
  std::vector<std::vector<int>> back(n, std::vector<int>(side, -1));
  for (int s = 0; s < side; ++s) {
    const Transfer& t0 = transfers[prototype[0]];
    for (int r = 0; r < side; ++r) dist[r] = t0.At(s, r);
    for (int i = 1; i < n; ++i) {
      const Transfer& ti = transfers[prototype[i]];
      for (int c = 0; c < side; ++c) {
        int value = kUnreachable;
        int arg = -1;
        for (int r = 0; r < side; ++r) {
          const int w = AddWeights(dist[r], ti.At(r, c));
          if (w < value) {
            value = w;
            arg = r;
          }
        }
        next[c] = value;
        back[i][c] = arg;
      }
      std::swap(dist, next);
    }
    if (dist[s] < best) {
      best = dist[s];
      best_start = s;
      best_back = back;
    }
  }
  if (best == kUnreachable) {
    return absl::FailedPreconditionError(
        "no consistent triple of perfect matchings around the ring");
  }

  // States: left[i] is block i's connector-0 state, right[i] its connector-1
  // state; right[i] == left[i+1].
  std::vector<int> left(n);
  std::vector<int> right(n);
  right[n - 1] = best_start;
  for (int i = n - 1; i >= 1; --i) {
    left[i] = best_back[i][right[i]];
    right[i - 1] = left[i];
  }
  left[0] = best_start;

  absl::StatusOr<RingLayout> layout = LayOutRing(blocks);
  if (!layout.ok()) return layout.status();
  const Graph& g = layout->graph;
  M3Result result;
  result.method = M3Method::kDp;
  result.total = g.edge_count();
  result.covered = result.total - best / 2;
  for (auto& w : result.witness) w = EdgeSet(g.edge_count());
  for (int i = 0; i < n; ++i) {
    const Transfer& t = transfers[prototype[i]];
    const std::array<int, 3>& triple = t.witness[left[i] * side + right[i]];
    for (int label = 0; label < 3; ++label) {
      const PerfectMatching& local = t.profile->matchings[triple[label]];
      for (EdgeRef e : local.ToVector()) {
        result.witness[label].Insert(layout->block_to_graph[i][e]);
      }
    }
  }
  if (best % 2 != 0 || !IsValidWitness(g, result)) {
    return absl::InternalError("ring DP produced an inconsistent witness");
  }
  return result;
}

absl::StatusOr<M3Result> M3RingDp(const FamilySpec& spec) {
  absl::StatusOr<std::vector<Multipole>> blocks = FamilyBlocks(spec);
  if (!blocks.ok()) return blocks.status();
  return M3RingDp(*blocks);
}

bool IsValidWitness(const Graph& g, const M3Result& result) {
  EdgeSet all(g.edge_count());
  for (const PerfectMatching& pm : result.witness) {
    if (!IsPerfectMatching(g, pm)) return false;
    all |= pm;
  }
  return all.Count() == result.covered && result.total == g.edge_count();
}

absl::StatusOr<M3Outcome> ComputeM3(const Graph& g, const M3Options& options) {
  if (options.method == MethodChoice::kDp) {
    return absl::InvalidArgumentError(
        "the ring DP needs a family specification, not a bare graph");
  }
  M3Outcome outcome;
  outcome.graph = g;
  absl::StatusOr<M3Result> brute = M3BruteForce(g, options.cap);
  if (!brute.ok()) return brute.status();
  outcome.brute = *std::move(brute);
  return outcome;
}

absl::StatusOr<M3Outcome> ComputeM3(const FamilySpec& spec,
                                    const M3Options& options) {
  absl::StatusOr<std::vector<Multipole>> blocks = FamilyBlocks(spec);
  if (!blocks.ok()) return blocks.status();
  absl::StatusOr<Graph> graph = BuildFamily(spec);
  if (!graph.ok()) return graph.status();
  M3Outcome outcome;
  outcome.graph = *std::move(graph);
  const bool want_dp = options.method != MethodChoice::kBrute;
  const bool want_brute =
      options.method == MethodChoice::kBrute || options.cross_check;
  if (want_dp) {
    absl::StatusOr<M3Result> dp = M3RingDp(*blocks);
    if (!dp.ok()) return dp.status();
    outcome.dp = *std::move(dp);
  }
  if (want_brute) {
    absl::StatusOr<M3Result> brute = M3BruteForce(outcome.graph, options.cap);
    if (!brute.ok()) return brute.status();
    outcome.brute = *std::move(brute);
  }
  if (outcome.dp && outcome.brute &&
      outcome.dp->covered != outcome.brute->covered) {
    return absl::InternalError(fmt::format("cross-check failed: dp {} vs brute {}", outcome.dp->value().ToString(), outcome.brute->value().ToString()));
  }
  return outcome;
}

}  // namespace m3cover
