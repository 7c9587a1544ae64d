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

// Command implementations behind the m3cover binary. Each command writes
// line-delimited JSON records to `out` and returns the process exit code:
// 0 success, 1 check failure, 2 usage or input error.

#ifndef M3COVER_TOOLS_COMMANDS_H_
#define M3COVER_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "m3cover/m3_solver.h"

namespace m3cover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Family selection shared by gen and m3: either (p, q) or (a, b).
struct FamilyArgs {
  std::string family;  // "cc2" or "cc4"; empty when unused
  std::optional<int64_t> p, q, a, b;
  std::string order;
  int64_t scale = 1;
};

struct GenArgs {
  FamilyArgs family;
  std::string out;  // empty: embed the encoding in the report
  std::string format = "graph6";
};

struct M3Args {
  std::string input;
  FamilyArgs family;
  std::string method = "auto";
  bool cross_check = false;
  int64_t cap = kDefaultMatchingCap;
  bool no_witness = false;
};

struct VerifyArgs {
  std::string check;
  std::string params;  // "a=1,b=2"
  bool all = false;
};

struct AnalyzeArgs {
  std::string input;
  bool girth = false;
  bool cyclic_connectivity = false;
  bool colorable = false;
  bool bridgeless = false;
};

struct IngestArgs {
  std::string input;
  std::string report;  // empty: stdout
  int64_t min_uncovered = 3;
  int64_t cap = kDefaultMatchingCap;
};

int RunGen(const GenArgs& args, std::ostream& out, std::ostream& err);
int RunM3(const M3Args& args, std::ostream& out, std::ostream& err);
int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int RunAnalyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int RunIngest(const IngestArgs& args, std::ostream& out, std::ostream& err);

// Reads a graph from a file holding either multipole text or one graph6
// record; the graph must pass Validate().
absl::StatusOr<Graph> LoadGraph(const std::string& path);

}  // namespace m3cover::cli

#endif  // M3COVER_TOOLS_COMMANDS_H_
