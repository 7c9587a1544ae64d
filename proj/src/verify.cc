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

#include "m3cover/verify.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <utility>

#include "absl/status/status.h"
#include "fmt/core.h"
#include "m3cover/generators.h"
#include "m3cover/m3_solver.h"
#include "m3cover/matching.h"
#include "m3cover/structure.h"

namespace m3cover {

using json = nlohmann::ordered_json;

json CheckReport::ToJson() const {
  json out;
  out["check"] = id;
  out["params"] = json::object();
  for (const auto& [k, v] : params) out["params"][k] = v;
  out["verdict"] = pass ? "pass" : "fail";
  out["evidence"] = evidence;
  out["failures"] = failures;
  out["runtime_ms"] = runtime_ms;
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(CheckReport* report) : report_(report) {}

  bool Expect(bool condition, std::string message) {
    if (!condition) report_->failures.push_back(std::move(message));
    return condition;
  }
  json& evidence() { return report_->evidence; }

 private:
  CheckReport* report_;
};

json MatchingJson(const Multipole& m, const PerfectMatching& pm) {
  json edges = json::array();
  for (EdgeRef e : pm.ToVector()) edges.push_back(m.EdgeName(e));
  return edges;
}

json TripleJson(const Multipole& m, const CoverProfile& profile,
                const std::array<int, 3>& triple) {
  json out = json::array();
  for (int i : triple) out.push_back(MatchingJson(m, profile.matchings[i]));
  return out;
}

// Re-validates a profile witness: three perfect matchings of `m` realizing
// state `s` with uncovered weight equal to the stored minimum.
bool ProfileWitnessHolds(const Multipole& m, const CoverProfile& profile,
                         BoundaryState s) {
  const auto& triple = profile.witness[s];
  EdgeSet covered(m.edge_count());
  for (int label = 0; label < 3; ++label) {
    const PerfectMatching& pm = profile.matchings[triple[label]];
    if (!IsPerfectMatching(m, pm)) return false;
    for (int t = 0; t < m.dangling_count(); ++t) {
      const bool in = pm.Contains(m.DanglingRef(t));
      if (in != ((MembershipOf(s, t) >> label) & 1)) return false;
    }
    covered |= pm;
  }
  return UncoveredWeight(m, covered) == profile.weight[s];
}

int UncoveredDanglings(BoundaryState s, int d) {
  int u = 0;
  for (int t = 0; t < d; ++t) u += MembershipOf(s, t) == 0 ? 1 : 0;
  return u;
}

json ResultJson(const M3Result& r) {
  json out;
  out["method"] = std::string(MethodName(r.method));
  out["covered"] = r.covered;
  out["total"] = r.total;
  out["value"] = r.value().ToDisplayString();
  if (r.matching_count >= 0) out["perfect_matchings"] = r.matching_count;
  return out;
}

std::string ValueOrSentinel(const std::optional<int>& v) {
  return v ? fmt::format("{}", *v) : "none";
}

void CheckLemmaA2(const CheckParams&, Checker& c) {
  const Multipole a = PoleA();
  const std::vector<PerfectMatching> pm = PerfectMatchings(a);
  int with = 0;
  int without = 0;
  int mixed = 0;
  for (const auto& m : pm) {
    const bool d0 = m.Contains(a.DanglingRef(0));
    const bool d1 = m.Contains(a.DanglingRef(1));
    if (d0 && d1) {
      ++with;
    } else if (!d0 && !d1) {
      ++without;
    } else {
      ++mixed;
    }
  }
  c.evidence()["perfect_matchings"] = pm.size();
  c.evidence()["with_both_danglings"] = with;
  c.evidence()["with_no_dangling"] = without;
  c.evidence()["with_one_dangling"] = mixed;
  c.Expect(mixed == 0, "(a) a perfect matching contains exactly one dangling");

  absl::StatusOr<CoverProfile> profile = BlockProfile(a);
  if (!c.Expect(profile.ok(), "profile of A failed")) return;
  // (b) all three matchings avoid the danglings.
  const BoundaryState empty = 0;
  const int w_empty = profile->weight[empty];
  c.Expect(profile->Reachable(empty), "(b) empty boundary state unreachable");
  const int links_b = (w_empty - 2) / 2;
  c.evidence()["b_min_uncovered_links"] = links_b;
  c.evidence()["b_min_weight_half_units"] = w_empty;
  c.evidence()["b_witness"] = TripleJson(a, *profile, profile->witness[empty]);
  c.Expect(w_empty == 6 && links_b == 2,
           fmt::format("(b) minimum weight {}, expected 6", w_empty));
  c.Expect(ProfileWitnessHolds(a, *profile, empty), "(b) witness invalid");

  // (c) some matching contains the danglings.
  int min_c = kUnreachable;
  BoundaryState arg_c = 0;
  json per_state = json::object();
  for (BoundaryState s = 1; s < profile->weight.size(); ++s) {
    if (!profile->Reachable(s)) continue;
    c.Expect(MembershipOf(s, 0) == MembershipOf(s, 1),
             "(c) reachable state with unequal dangling memberships");
    per_state[fmt::format("{}", MembershipOf(s, 0))] = profile->weight[s] / 2;
    if (profile->weight[s] < min_c) {
      min_c = profile->weight[s];
      arg_c = s;
    }
  }
  c.evidence()["c_min_uncovered_links"] = min_c / 2;
  c.evidence()["c_min_links_by_membership"] = per_state;
  c.evidence()["c_witness"] = TripleJson(a, *profile, profile->witness[arg_c]);
  c.Expect(min_c == 6, fmt::format("(c) minimum weight {}, expected 6 (3 links)", min_c));
  c.Expect(ProfileWitnessHolds(a, *profile, arg_c), "(c) witness invalid");
}

void CheckLemmaB2(const CheckParams&, Checker& c) {
  const Multipole b = PoleB();
  const std::vector<PerfectMatching> pm = PerfectMatchings(b);
  int mixed = 0;
  for (const auto& m : pm) {
    if (m.Contains(b.DanglingRef(0)) != m.Contains(b.DanglingRef(1))) ++mixed;
  }
  c.evidence()["perfect_matchings"] = pm.size();
  c.evidence()["with_one_dangling"] = mixed;
  c.Expect(mixed == 0, "(a) a perfect matching contains exactly one dangling");
  absl::StatusOr<CoverProfile> profile = BlockProfile(b);
  if (!c.Expect(profile.ok(), "profile of B failed")) return;
  BoundaryState arg = 0;
  for (BoundaryState s = 0; s < profile->weight.size(); ++s) {
    if (profile->weight[s] < profile->weight[arg]) arg = s;
  }
  c.evidence()["min_weight_half_units"] = profile->weight[arg];
  c.evidence()["witness"] = TripleJson(b, *profile, profile->witness[arg]);
  c.Expect(profile->weight[arg] == 0, "(b) no triple covers every edge of B");
  c.Expect(ProfileWitnessHolds(b, *profile, arg), "(b) witness invalid");
}

void CheckLemmaA4(const CheckParams&, Checker& c) {
  absl::StatusOr<Multipole> built = BuildPoleAPrime();
  c.evidence()["structural_gate"] =
      built.ok() ? "pass" : built.status().ToString();
  if (!c.Expect(built.ok(), "A' structural gate failed")) return;
  const Multipole& m = *built;
  absl::StatusOr<CoverProfile> profile = BlockProfile(m);
  if (!c.Expect(profile.ok(), "profile of A' failed")) return;
  const int d = m.dangling_count();
  const size_t n = profile->matchings.size();
  c.evidence()["perfect_matchings"] = n;
  c.evidence()["triples_examined"] = n * (n + 1) * (n + 2) / 6;
  int global_min = kUnreachable;
  int reachable = 0;
  std::optional<BoundaryState> three_links;
  std::optional<BoundaryState> two_and_two;
  for (BoundaryState s = 0; s < profile->weight.size(); ++s) {
    if (!profile->Reachable(s)) continue;
    ++reachable;
    const int w = profile->weight[s];
    const int u = UncoveredDanglings(s, d);
    const int links = (w - u) / 2;
    global_min = std::min(global_min, w);
    c.Expect(links >= 3 || (links >= 2 && u >= 2),
             fmt::format("state {}: {} links and {} danglings uncovered", s, links, u));
    if (w == 6 && u == 0 && !three_links) three_links = s;
    if (w == 6 && u == 2 && !two_and_two) two_and_two = s;
  }
  c.evidence()["reachable_states"] = reachable;
  c.evidence()["min_weight_half_units"] = global_min;
  c.Expect(global_min == 6,
           fmt::format("minimum weight {}, expected 6", global_min));
  c.Expect(three_links.has_value(), "pattern '3 links' never attained");
  c.Expect(two_and_two.has_value(),
           "pattern '2 links + 2 danglings' never attained");
  if (three_links) {
    c.evidence()["witness_3_links"] =
        TripleJson(m, *profile, profile->witness[*three_links]);
    c.Expect(ProfileWitnessHolds(m, *profile, *three_links),
             "'3 links' witness invalid");
  }
  if (two_and_two) {
    c.evidence()["witness_2_links_2_danglings"] =
        TripleJson(m, *profile, profile->witness[*two_and_two]);
    c.Expect(ProfileWitnessHolds(m, *profile, *two_and_two),
             "'2 links + 2 danglings' witness invalid");
  }
}

void CheckFraction(int k, const CheckParams& p, Checker& c) {
  FamilySpec spec;
  spec.k = k;
  spec.a = p.at("a");
  spec.b = p.at("b");
  const Rational formula = PredictedM3(spec);
  c.evidence()["edges"] = FamilyEdgeCount(spec);
  c.evidence()["formula"] = formula.ToDisplayString();
  M3Options options;
  options.method = MethodChoice::kDp;
  options.cross_check = FamilyEdgeCount(spec) <= p.at("brute_max_edges");
  absl::StatusOr<M3Outcome> outcome = ComputeM3(spec, options);
  if (!c.Expect(outcome.ok(), outcome.status().ToString())) return;
  c.evidence()["dp"] = ResultJson(*outcome->dp);
  c.Expect(outcome->dp->value() == formula,
           fmt::format("dp value {} != {}", outcome->dp->value().ToString(), formula.ToString()));
  c.Expect(IsValidWitness(outcome->graph, *outcome->dp), "dp witness invalid");
  if (outcome->brute) {
    c.evidence()["brute"] = ResultJson(*outcome->brute);
    c.Expect(outcome->brute->value() == formula, "brute force disagrees");
    c.Expect(IsValidWitness(outcome->graph, *outcome->brute),
             "brute witness invalid");
  } else {
    c.evidence()["brute"] = "skipped (above brute_max_edges)";
  }
}

// Cyclic connectivity via the scalable algorithm, with an oracle cross-check
// inside the oracle range, and re-validation of the witness cut.
json CyclicConnectivityEvidence(const Graph& g, int expected, Checker& c) {
  json out;
  const ConnectivityResult fast = CyclicEdgeConnectivity(g);
  out["value"] = ValueOrSentinel(fast.value);
  std::vector<EdgeRef> cut;
  const bool separating = IsCycleSeparating(g, fast.side, &cut);
  out["witness_cut_is_cycle_separating"] = separating;
  c.Expect(separating && static_cast<int>(cut.size()) == fast.value.value_or(-1),
           fmt::format("{}: witness cut does not re-validate", g.name()));
  c.Expect(fast.value == expected,
           fmt::format("{}: cyclic connectivity {}, expected {}", g.name(), ValueOrSentinel(fast.value), expected));
  if (g.vertex_count() <= 26) {
    absl::StatusOr<ConnectivityResult> oracle = CyclicConnectivityOracle(g);
    out["oracle"] = ValueOrSentinel(oracle->value);
    c.Expect(oracle->value == fast.value,
             fmt::format("{}: oracle disagrees", g.name()));
  } else {
    out["oracle"] = "out of range";
  }
  return out;
}

void CheckTheorem(int k, const CheckParams& p, Checker& c) {
  const FractionTarget target{p.at("p"), p.at("q")};
  absl::StatusOr<FamilyParams> params = ParamsForFraction(k, target);
  if (!c.Expect(params.ok(), params.status().ToString())) return;
  c.evidence()["a"] = params->a;
  c.evidence()["b"] = params->b;
  const Rational wanted{target.p, target.q};
  json instances = json::array();
  for (int64_t scale : {int64_t{1}, int64_t{2}}) {
    FamilySpec spec{k, params->a, params->b, "", scale};
    json inst;
    inst["scale"] = scale;
    absl::StatusOr<M3Outcome> outcome = ComputeM3(spec, {});
    if (!c.Expect(outcome.ok(), outcome.status().ToString())) return;
    const Graph& g = outcome->graph;
    inst["graph"] = g.name();
    inst["vertices"] = g.vertex_count();
    inst["edges"] = g.edge_count();
    inst["m3"] = ResultJson(*outcome->dp);
    c.Expect(outcome->dp->value() == wanted,
             fmt::format("{}: m3 {} != {}", g.name(), outcome->dp->value().ToString(), wanted.ToString()));
    c.Expect(IsValidWitness(g, *outcome->dp),
             fmt::format("{}: witness invalid", g.name()));
    c.Expect(IsBridgeless(g), fmt::format("{}: has a bridge", g.name()));
    if (k == 2) {
      if (params->b >= 1 || params->a * scale >= 2) {
        inst["cyclic_connectivity"] = CyclicConnectivityEvidence(g, 2, c);
      }
    } else {
      const std::optional<int> girth = Girth(g);
      inst["girth"] = ValueOrSentinel(girth);
      c.Expect(girth == 5, fmt::format("{}: girth is not 5", g.name()));
      inst["cyclic_connectivity"] = CyclicConnectivityEvidence(g, 4, c);
    }
    instances.push_back(inst);
  }
  c.evidence()["instances"] = instances;
}

void CheckBlanusaPairing(const CheckParams&, Checker& c) {
  const Multipole block = BlanusaBlock();
  absl::StatusOr<std::vector<EdgeColoring>> all = EdgeColorings(block);
  if (!c.Expect(all.ok(), "enumeration failed")) return;
  auto color = [&](const EdgeColoring& col, const char* label) {
    return col[block.DanglingRef(*block.FindDangling(label))];
  };
  int violations = 0;
  for (const EdgeColoring& col : *all) {
    if (!IsProperColoring(block, col) ||
        color(col, "f1") != color(col, "f3") ||
        color(col, "f2") != color(col, "f4")) {
      ++violations;
    }
  }
  c.evidence()["colorings"] = all->size();
  c.evidence()["pairing_violations"] = violations;
  c.Expect(!all->empty(), "Blanusa block has no colouring");
  c.Expect(violations == 0, "a colouring breaks the f1=f3, f2=f4 pairing");
  const bool same =
      Is3EdgeColorable(block, {{"f1", 2}, {"f2", 2}, {"f3", 2}, {"f4", 2}});
  const bool mixed =
      Is3EdgeColorable(block, {{"f1", 1}, {"f3", 1}, {"f2", 2}, {"f4", 2}});
  c.evidence()["all_boundary_colour_2"] = same;
  c.evidence()["f1_f3_colour_1_f2_f4_colour_2"] = mixed;
  c.Expect(same, "no colouring with all dangling edges coloured 2");
  c.Expect(mixed, "no colouring with f1,f3 -> 1 and f2,f4 -> 2");
}

void CheckLemmaI(const CheckParams& p, Checker& c) {
  int graphs = 0;
  int pairs = 0;
  int violations = 0;
  json counterexamples = json::array();
  for (int n = 4; n <= p.at("max_vertices"); n += 2) {
    for (const Graph& g : ConnectedCubicGraphs(n)) {
      ++graphs;
      const std::optional<int> before = CyclicConnectivityOracle(g)->value;
      for (EdgeRef e1 = 0; e1 < g.link_count(); ++e1) {
        for (EdgeRef e2 = e1; e2 < g.link_count(); ++e2) {
          ++pairs;
          const IExtension ext = *IExtend(g, e1, e2);
          const std::optional<int> after =
              CyclicConnectivityOracle(ext.graph)->value;
          const std::optional<int> through =
              ShortestCycleThrough(ext.graph, ext.added);
          // nullopt means no cycle-separating cut exists: +infinity.
          const int inf = 1 << 20;
          const int bound = std::min(before.value_or(inf), through.value_or(inf));
          if (after.value_or(inf) < bound) {
            ++violations;
            if (counterexamples.size() < 5) {
              counterexamples.push_back(
                  {{"graph", g.name()}, {"e1", g.EdgeName(e1)},
                   {"e2", g.EdgeName(e2)}, {"before", ValueOrSentinel(before)},
                   {"after", ValueOrSentinel(after)},
                   {"through_new_edge", ValueOrSentinel(through)}});
            }
          }
        }
      }
    }
  }
  c.evidence()["graphs"] = graphs;
  c.evidence()["edge_pairs"] = pairs;
  c.evidence()["violations"] = violations;
  if (!counterexamples.empty()) c.evidence()["counterexamples"] = counterexamples;
  c.Expect(violations == 0, fmt::format("{} violations", violations));
}

void CheckPetersen(const CheckParams&, Checker& c) {
  const Graph g = Petersen();
  absl::StatusOr<M3Result> r = M3BruteForce(g);
  if (!c.Expect(r.ok(), r.status().ToString())) return;
  c.evidence()["m3"] = ResultJson(*r);
  json witness = json::array();
  for (const auto& pm : r->witness) witness.push_back(MatchingJson(g, pm));
  c.evidence()["witness"] = witness;
  c.Expect(r->covered == 12 && r->total == 15,
           fmt::format("m3 {}, expected 12/15", r->value().ToString()));
  c.Expect(IsValidWitness(g, *r), "witness invalid");
}

struct CheckDef {
  CheckParams defaults;
  std::function<void(const CheckParams&, Checker&)> run;
};

const std::map<std::string, CheckDef, std::less<>>& Registry() {
  static const auto* registry =
      new std::map<std::string, CheckDef, std::less<>>{
          {"lemma-A2", {{}, CheckLemmaA2}},
          {"lemma-B2", {{}, CheckLemmaB2}},
          {"lemma-A4", {{}, CheckLemmaA4}},
          {"fraction2",
           {{{"a", 1}, {"b", 1}, {"brute_max_edges", 36}},
            [](const CheckParams& p, Checker& c) { CheckFraction(2, p, c); }}},
          {"fraction4",
           {{{"a", 1}, {"b", 0}, {"brute_max_edges", 30}},
            [](const CheckParams& p, Checker& c) { CheckFraction(4, p, c); }}},
          {"theorem-cc2",
           {{{"p", 5}, {"q", 6}},
            [](const CheckParams& p, Checker& c) { CheckTheorem(2, p, c); }}},
          {"theorem-cc4",
           {{{"p", 9}, {"q", 10}},
            [](const CheckParams& p, Checker& c) { CheckTheorem(4, p, c); }}},
          {"blanusa-pairing", {{}, CheckBlanusaPairing}},
          {"lemma-I", {{{"max_vertices", 10}}, CheckLemmaI}},
          {"petersen-m3", {{}, CheckPetersen}},
      };
  return *registry;
}

}  // namespace

const std::vector<std::string>& CheckIds() {
  static const auto* ids = new std::vector<std::string>{
      "petersen-m3", "lemma-A2",        "lemma-B2",    "lemma-A4",
      "fraction2",   "fraction4",       "theorem-cc2", "theorem-cc4",
      "blanusa-pairing", "lemma-I"};
  return *ids;
}

absl::StatusOr<CheckParams> DefaultParams(std::string_view id) {
  auto it = Registry().find(id);
  if (it == Registry().end()) {
    return absl::NotFoundError(fmt::format("unknown check id '{}'", id));
  }
  return it->second.defaults;
}

absl::StatusOr<CheckReport> RunCheck(std::string_view id,
                                     const CheckParams& params) {
  auto it = Registry().find(id);
  if (it == Registry().end()) {
    return absl::NotFoundError(fmt::format("unknown check id '{}'", id));
  }
  CheckParams merged = it->second.defaults;
  for (const auto& [key, value] : params) {
    if (!merged.contains(key)) {
      return absl::InvalidArgumentError(
          fmt::format("check '{}' has no parameter '{}'", id, key));
    }
    merged[key] = value;
  }
  CheckReport report;
  report.id = std::string(id);
  report.params = merged;
  Checker checker(&report);
  const auto start = std::chrono::steady_clock::now();
  it->second.run(merged, checker);
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  report.pass = report.failures.empty();
  return report;
}

std::vector<CheckReport> RunAllChecks() {
  std::vector<CheckReport> out;
  for (const std::string& id : CheckIds()) out.push_back(*RunCheck(id));
  return out;
}

}  // namespace m3cover
