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

#include "commands.h"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fmt/core.h"
#include "json.hpp"
#include "m3cover/formats.h"
#include "m3cover/generators.h"
#include "m3cover/m3_solver.h"
#include "m3cover/matching.h"
#include "m3cover/multipole.h"
#include "m3cover/structure.h"
#include "m3cover/verify.h"

namespace m3cover::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Oracle cross-checks in `analyze` are limited to graphs this small.
constexpr int kAnalyzeOracleVertices = 20;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void WriteRecord(std::ostream& out, const Json& record) {
  out << record.dump() << '\n';
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << '\n';
  return kExitUsage;
}

int Fail(std::ostream& err, std::string_view message) {
  err << "error: " << message << '\n';
  return kExitUsage;
}

Json RationalJson(const Rational& r) {
  Json j;
  j["value"] = r.ToString();
  j["reduced"] = r.Reduced().ToString();
  j["display"] = r.ToDisplayString();
  return j;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Multipole text starts (after blank and comment lines) with a keyword.
bool LooksLikeMultipoleText(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::string_view t = Trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') return true;
    return t.starts_with("multipole") || t.starts_with("vertices");
  }
  return false;
}

absl::Status CheckValid(const Multipole& m) {
  const ValidationReport report = Validate(m);
  if (report.ok()) return absl::OkStatus();
  std::string joined;
  for (const std::string& problem : report.problems) {
    if (!joined.empty()) joined += "; ";
    joined += problem;
  }
  return absl::InvalidArgumentError(
      fmt::format("invalid graph {}: {}", m.name(), joined));
}

bool FamilyRequested(const FamilyArgs& f) {
  return !f.family.empty() || f.p || f.q || f.a || f.b || !f.order.empty() ||
         f.scale != 1;
}

absl::StatusOr<FamilySpec> ResolveFamily(const FamilyArgs& f) {
  FamilySpec spec;
  if (f.family == "cc2") {
    spec.k = 2;
  } else if (f.family == "cc4") {
    spec.k = 4;
  } else {
    return absl::InvalidArgumentError(
        fmt::format("--family must be cc2 or cc4, got '{}'", f.family));
  }
  const bool by_fraction = f.p || f.q;
  const bool by_params = f.a || f.b;
  if (by_fraction == by_params) {
    return absl::InvalidArgumentError(
        "give either --p and --q or --a and --b");
  }
  if (by_fraction) {
    if (!f.p || !f.q) {
      return absl::InvalidArgumentError("--p and --q must be given together");
    }
    absl::StatusOr<FamilyParams> params =
        ParamsForFraction(spec.k, {*f.p, *f.q});
    if (!params.ok()) return params.status();
    spec.a = params->a;
    spec.b = params->b;
  } else {
    spec.a = f.a.value_or(0);
    spec.b = f.b.value_or(0);
  }
  spec.order = f.order;
  spec.scale = f.scale;
  if (absl::Status s = ValidateFamilySpec(spec); !s.ok()) return s;
  return spec;
}

Json FamilyJson(const FamilyArgs& f, const FamilySpec& spec) {
  Json j;
  j["family"] = f.family;
  if (f.p) j["p"] = *f.p;
  if (f.q) j["q"] = *f.q;
  j["a"] = spec.a;
  j["b"] = spec.b;
  j["order"] = EffectiveOrder(spec);
  j["scale"] = spec.scale;
  return j;
}

Json WitnessJson(const Graph& g, const M3Result& result) {
  Json triple = Json::array();
  for (const PerfectMatching& m : result.witness) {
    Json edges = Json::array();
    for (EdgeRef e : m.ToVector()) edges.push_back(g.EdgeName(e));
    triple.push_back(std::move(edges));
  }
  EdgeSet covered = result.witness[0];
  covered |= result.witness[1];
  covered |= result.witness[2];
  Json uncovered = Json::array();
  for (EdgeRef e = 0; e < g.edge_count(); ++e) {
    if (!covered.Contains(e)) uncovered.push_back(g.EdgeName(e));
  }
  Json j;
  j["matchings"] = std::move(triple);
  j["uncovered"] = std::move(uncovered);
  return j;
}

Json ResultJson(const Graph& g, const M3Result& result, bool with_witness) {
  Json j;
  j["method"] = std::string(MethodName(result.method));
  j["m3"] = result.value().ToString();
  j["m3_display"] = result.value().ToDisplayString();
  j["covered"] = result.covered;
  j["total"] = result.total;
  j["uncovered"] = result.uncovered();
  if (result.matching_count >= 0) j["matching_count"] = result.matching_count;
  if (with_witness) j["witness"] = WitnessJson(g, result);
  return j;
}

absl::StatusOr<MethodChoice> ParseMethod(std::string_view name) {
  if (name == "auto") return MethodChoice::kAuto;
  if (name == "brute") return MethodChoice::kBrute;
  if (name == "dp") return MethodChoice::kDp;
  return absl::InvalidArgumentError(
      fmt::format("--method must be auto, brute or dp, got '{}'", name));
}

absl::StatusOr<CheckParams> ParseParams(std::string_view text) {
  CheckParams params;
  std::istringstream items{std::string(text)};
  std::string item;
  while (std::getline(items, item, ',')) {
    const std::string_view t = Trim(item);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      return absl::InvalidArgumentError(
          fmt::format("parameter '{}' is not of the form name=value", t));
    }
    const std::string name(Trim(t.substr(0, eq)));
    const std::string value(Trim(t.substr(eq + 1)));
    size_t used = 0;
    int64_t parsed = 0;
    try {
      parsed = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (name.empty() || value.empty() || used != value.size()) {
      return absl::InvalidArgumentError(
          fmt::format("parameter '{}' needs an integer value", t));
    }
    params[name] = parsed;
  }
  return params;
}

}  // namespace

absl::StatusOr<Graph> LoadGraph(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Graph> graph = [&]() -> absl::StatusOr<Graph> {
    if (LooksLikeMultipoleText(*text)) {
      absl::StatusOr<Multipole> m = ParseMultipoleText(*text);
      if (!m.ok()) return m.status();
      return Graph::FromMultipole(*m);
    }
    absl::StatusOr<Graph> decoded = DecodeGraph6(Trim(*text));
    if (!decoded.ok()) return decoded.status();
    return Graph(decoded->vertex_count(), decoded->links(),
                 std::filesystem::path(path).stem().string());
  }();
  if (!graph.ok()) {
    return absl::InvalidArgumentError(
        fmt::format("{}: {}", path, std::string(graph.status().message())));
  }
  if (absl::Status s = CheckValid(*graph); !s.ok()) return s;
  return graph;
}

int RunGen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  absl::StatusOr<FamilySpec> spec = ResolveFamily(args.family);
  if (!spec.ok()) return Fail(err, spec.status());
  if (args.format != "graph6" && args.format != "multipole") {
    return Fail(err, fmt::format("--format must be graph6 or multipole, "
                                 "got '{}'", args.format));
  }
  absl::StatusOr<Graph> g = BuildFamily(*spec);
  if (!g.ok()) return Fail(err, g.status());

  std::string encoded;
  if (args.format == "graph6") {
    absl::StatusOr<std::string> g6 = EncodeGraph6(*g);
    if (!g6.ok()) return Fail(err, g6.status());
    encoded = *g6 + "\n";
  } else {
    encoded = EmitMultipoleText(*g);
  }
  if (!args.out.empty()) {
    std::ofstream file(args.out, std::ios::binary);
    file << encoded;
    if (!file) return Fail(err, fmt::format("cannot write {}", args.out));
  }

  Json record;
  record["command"] = "gen";
  record["inputs"] = FamilyJson(args.family, *spec);
  record["inputs"]["format"] = args.format;
  Json result;
  result["name"] = g->name();
  result["vertices"] = g->vertex_count();
  result["edges"] = g->edge_count();
  result["predicted_m3"] = RationalJson(PredictedM3(*spec));
  if (args.out.empty()) {
    result["encoding"] = encoded;
  } else {
    result["out"] = args.out;
  }
  record["result"] = std::move(result);
  record["elapsed_ms"] = MillisSince(start);
  WriteRecord(out, record);
  return kExitOk;
}

int RunM3(const M3Args& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const bool from_family = FamilyRequested(args.family);
  if (from_family == !args.input.empty()) {
    return Fail(err, "give exactly one of --input or --family");
  }
  absl::StatusOr<MethodChoice> method = ParseMethod(args.method);
  if (!method.ok()) return Fail(err, method.status());
  if (args.cap < 1) return Fail(err, "--cap must be positive");
  const M3Options options{*method, args.cross_check, args.cap};

  Json record;
  record["command"] = "m3";
  absl::StatusOr<M3Outcome> outcome;
  if (from_family) {
    absl::StatusOr<FamilySpec> spec = ResolveFamily(args.family);
    if (!spec.ok()) return Fail(err, spec.status());
    record["inputs"] = FamilyJson(args.family, *spec);
    outcome = ComputeM3(*spec, options);
    if (outcome.ok()) {
      record["inputs"]["predicted_m3"] = RationalJson(PredictedM3(*spec));
    }
  } else {
    record["inputs"]["input"] = args.input;
    absl::StatusOr<Graph> g = LoadGraph(args.input);
    if (!g.ok()) return Fail(err, g.status());
    outcome = ComputeM3(*g, options);
  }
  if (!outcome.ok()) return Fail(err, outcome.status());
  record["inputs"]["method"] = args.method;
  record["inputs"]["cross_check"] = args.cross_check;
  record["inputs"]["cap"] = args.cap;

  const Graph& g = outcome->graph;
  Json result;
  result["name"] = g.name();
  result["vertices"] = g.vertex_count();
  result["edges"] = g.edge_count();
  const M3Result& primary = outcome->primary();
  result["m3"] = primary.value().ToString();
  result["m3_display"] = primary.value().ToDisplayString();
  if (outcome->dp) result["dp"] = ResultJson(g, *outcome->dp, !args.no_witness);
  if (outcome->brute) {
    result["brute"] = ResultJson(g, *outcome->brute, !args.no_witness);
  }
  if (outcome->dp && outcome->brute) {
    result["agree"] = outcome->dp->covered == outcome->brute->covered;
  }
  record["result"] = std::move(result);
  record["elapsed_ms"] = MillisSince(start);
  WriteRecord(out, record);
  return kExitOk;
}

int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.all == !args.check.empty()) {
    return Fail(err, "give exactly one of --check or --all");
  }
  if (args.all && !args.params.empty()) {
    return Fail(err, "--params applies to a single --check");
  }
  std::vector<std::string> ids =
      args.all ? CheckIds() : std::vector<std::string>{args.check};
  absl::StatusOr<CheckParams> overrides = ParseParams(args.params);
  if (!overrides.ok()) return Fail(err, overrides.status());

  // Reject unknown ids and parameters before running anything.
  for (const std::string& id : ids) {
    absl::StatusOr<CheckParams> defaults = DefaultParams(id);
    if (!defaults.ok()) return Fail(err, defaults.status());
    for (const auto& [name, value] : *overrides) {
      if (!defaults->contains(name)) {
        return Fail(err, fmt::format("check {} has no parameter '{}'", id,
                                     name));
      }
    }
  }

  bool all_pass = true;
  for (const std::string& id : ids) {
    absl::StatusOr<CheckReport> report = RunCheck(id, *overrides);
    if (!report.ok()) return Fail(err, report.status());
    Json record;
    record["command"] = "verify";
    const Json fields = report->ToJson();
    for (const auto& [key, value] : fields.items()) record[key] = value;
    WriteRecord(out, record);
    all_pass = all_pass && report->pass;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int RunAnalyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (args.input.empty()) return Fail(err, "--input is required");
  absl::StatusOr<Graph> g = LoadGraph(args.input);
  if (!g.ok()) return Fail(err, g.status());

  const bool everything = !args.girth && !args.cyclic_connectivity &&
                          !args.colorable && !args.bridgeless;
  Json record;
  record["command"] = "analyze";
  record["inputs"]["input"] = args.input;
  Json result;
  result["name"] = g->name();
  result["vertices"] = g->vertex_count();
  result["edges"] = g->edge_count();
  bool consistent = true;
  if (everything || args.girth) {
    const std::optional<int> girth = Girth(*g);
    result["girth"] = girth ? Json(*girth) : Json(nullptr);
  }
  if (everything || args.cyclic_connectivity) {
    const ConnectivityResult cc = CyclicEdgeConnectivity(*g);
    Json j;
    j["value"] = cc.value ? Json(*cc.value) : Json(nullptr);
    Json cut = Json::array();
    for (EdgeRef e : cc.cut) cut.push_back(g->EdgeName(e));
    j["cut"] = std::move(cut);
    j["side"] = cc.side;
    if (g->vertex_count() <= kAnalyzeOracleVertices) {
      absl::StatusOr<ConnectivityResult> oracle =
          CyclicConnectivityOracle(*g, kAnalyzeOracleVertices);
      if (oracle.ok()) {
        j["oracle_value"] =
            oracle->value ? Json(*oracle->value) : Json(nullptr);
        j["oracle_agrees"] = oracle->value == cc.value;
        consistent = consistent && oracle->value == cc.value;
      }
    }
    result["cyclic_connectivity"] = std::move(j);
  }
  if (everything || args.colorable) {
    result["colorable"] = Is3EdgeColorable(*g);
  }
  if (everything || args.bridgeless) {
    result["bridgeless"] = IsBridgeless(*g);
  }
  record["result"] = std::move(result);
  record["elapsed_ms"] = MillisSince(start);
  WriteRecord(out, record);
  return consistent ? kExitOk : kExitCheckFailed;
}

int RunIngest(const IngestArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (args.input.empty()) return Fail(err, "--input is required");
  if (args.cap < 1) return Fail(err, "--cap must be positive");
  if (args.min_uncovered < 0) return Fail(err, "--min-uncovered must be >= 0");
  std::ifstream in(args.input, std::ios::binary);
  if (!in) return Fail(err, fmt::format("cannot open {}", args.input));

  std::unique_ptr<std::ofstream> report_file;
  std::ostream* report = &out;
  if (!args.report.empty()) {
    report_file = std::make_unique<std::ofstream>(args.report,
                                                  std::ios::binary);
    if (!*report_file) {
      return Fail(err, fmt::format("cannot write {}", args.report));
    }
    report = report_file.get();
  }

  int64_t rows = 0, computed = 0, snarks = 0, colorable = 0, malformed = 0,
          capped = 0, flagged = 0;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view text = Trim(line);
    if (text.empty() || text == ">>graph6<<") continue;
    ++rows;
    const auto row_start = Clock::now();
    Json row;
    row["command"] = "ingest";
    row["line"] = line_number;
    row["graph6"] = std::string(text);
    Json flags = Json::array();

    absl::StatusOr<Graph> g = DecodeGraph6(text);
    absl::Status problem = g.ok() ? CheckValid(*g) : g.status();
    if (!problem.ok()) {
      ++malformed;
      flags.push_back("malformed");
      row["error"] = std::string(problem.message());
    } else {
      row["vertices"] = g->vertex_count();
      row["edges"] = g->edge_count();
      absl::StatusOr<M3Result> result = M3BruteForce(*g, args.cap);
      if (absl::IsResourceExhausted(result.status())) {
        ++capped;
        flags.push_back("cap-exceeded");
        row["error"] = std::string(result.status().message());
      } else if (!result.ok()) {
        ++malformed;
        flags.push_back("malformed");
        row["error"] = std::string(result.status().message());
      } else {
        ++computed;
        row["m3"] = result->value().ToString();
        row["m3_display"] = result->value().ToDisplayString();
        row["uncovered"] = result->uncovered();
        row["matching_count"] = result->matching_count;
        if (result->uncovered() == 0) {
          ++colorable;
          flags.push_back("not-a-snark");
        } else {
          ++snarks;
        }
        if (result->uncovered() >= args.min_uncovered) {
          ++flagged;
          flags.push_back(fmt::format("uncovered>={}", args.min_uncovered));
        }
      }
    }
    row["flags"] = std::move(flags);
    row["elapsed_ms"] = MillisSince(row_start);
    WriteRecord(*report, row);
  }

  Json summary;
  summary["command"] = "ingest";
  summary["inputs"]["input"] = args.input;
  summary["inputs"]["min_uncovered"] = args.min_uncovered;
  summary["inputs"]["cap"] = args.cap;
  summary["summary"] = {{"rows", rows},           {"computed", computed},
                        {"snarks", snarks},       {"not_a_snark", colorable},
                        {"malformed", malformed}, {"cap_exceeded", capped},
                        {"flagged", flagged}};
  summary["elapsed_ms"] = MillisSince(start);
  WriteRecord(*report, summary);
  report->flush();
  if (!*report) return Fail(err, "failed writing the report");
  return kExitOk;
}

}  // namespace m3cover::cli
