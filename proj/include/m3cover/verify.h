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

// Machine checks for each structural claim about the gadgets and families.
// Every check rebuilds its objects from the generators and re-validates the
// witnesses it reports.

#ifndef M3COVER_VERIFY_H_
#define M3COVER_VERIFY_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace m3cover {

using CheckParams = std::map<std::string, int64_t>;

struct CheckReport {
  std::string id;
  CheckParams params;
  bool pass = false;
  // Counts, extremal witnesses and attained minima, in a stable order.
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  // One line per failed assertion.
  std::vector<std::string> failures;
  double runtime_ms = 0;

  nlohmann::ordered_json ToJson() const;
};

// Ids in their canonical run order.
const std::vector<std::string>& CheckIds();

// Default parameters of a check; unknown ids yield NotFound.
absl::StatusOr<CheckParams> DefaultParams(std::string_view id);

// Runs one check. `params` override the defaults; unknown ids and unknown
// parameter names are errors.
absl::StatusOr<CheckReport> RunCheck(std::string_view id,
                                     const CheckParams& params = {});

// Every id at its default parameters.
std::vector<CheckReport> RunAllChecks();

}  // namespace m3cover

#endif  // M3COVER_VERIFY_H_
