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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using m3cover::cli::FamilyArgs;

void AddFamilyOptions(CLI::App* cmd, FamilyArgs* f) {
  cmd->add_option("--family", f->family, "Graph family: cc2 or cc4");
  cmd->add_option("--p", f->p, "Numerator of the target fraction");
  cmd->add_option("--q", f->q, "Denominator of the target fraction");
  cmd->add_option("--a", f->a, "Number of A blocks");
  cmd->add_option("--b", f->b, "Number of B blocks");
  cmd->add_option("--order", f->order, "Block order around the ring, e.g. ABAB");
  cmd->add_option("--scale", f->scale, "Repeat the block order this many times");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect matching covers of cubic graphs"};
  app.require_subcommand(1);

  m3cover::cli::GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a family member");
  AddFamilyOptions(gen_cmd, &gen.family);
  gen_cmd->add_option("--out", gen.out, "Write the graph to this file");
  gen_cmd->add_option("--format", gen.format, "graph6 or multipole");

  m3cover::cli::M3Args m3;
  CLI::App* m3_cmd = app.add_subcommand("m3", "Compute m3 exactly");
  m3_cmd->add_option("--input", m3.input, "Graph file (graph6 or multipole)");
  AddFamilyOptions(m3_cmd, &m3.family);
  m3_cmd->add_option("--method", m3.method, "auto, brute or dp");
  m3_cmd->add_flag("--cross-check", m3.cross_check,
                   "Also run brute force on family input");
  m3_cmd->add_option("--cap", m3.cap, "Perfect matching cap for brute force");
  m3_cmd->add_flag("--no-witness", m3.no_witness, "Omit the covering triple");

  m3cover::cli::VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification checks");
  verify_cmd->add_option("--check", verify.check, "Check id");
  verify_cmd->add_option("--params", verify.params, "Overrides, e.g. a=1,b=2");
  verify_cmd->add_flag("--all", verify.all, "Run every check");

  m3cover::cli::AnalyzeArgs analyze;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Report structural invariants");
  analyze_cmd->add_option("--input", analyze.input, "Graph file")->required();
  analyze_cmd->add_flag("--girth", analyze.girth);
  analyze_cmd->add_flag("--cyclic-connectivity", analyze.cyclic_connectivity);
  analyze_cmd->add_flag("--colorable", analyze.colorable);
  analyze_cmd->add_flag("--bridgeless", analyze.bridgeless);

  m3cover::cli::IngestArgs ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "Compute m3 for every graph in a graph6 list");
  ingest_cmd->add_option("--input", ingest.input, "graph6 file")->required();
  ingest_cmd->add_option("--report", ingest.report, "Report file (default stdout)");
  ingest_cmd->add_option("--min-uncovered", ingest.min_uncovered,
                         "Flag graphs leaving at least K edges uncovered");
  ingest_cmd->add_option("--cap", ingest.cap,
                         "Perfect matching cap per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? m3cover::cli::kExitOk : m3cover::cli::kExitUsage;
  }

  if (*gen_cmd) return m3cover::cli::RunGen(gen, std::cout, std::cerr);
  if (*m3_cmd) return m3cover::cli::RunM3(m3, std::cout, std::cerr);
  if (*verify_cmd) return m3cover::cli::RunVerify(verify, std::cout, std::cerr);
  if (*analyze_cmd) {
    return m3cover::cli::RunAnalyze(analyze, std::cout, std::cerr);
  }
  return m3cover::cli::RunIngest(ingest, std::cout, std::cerr);
}
