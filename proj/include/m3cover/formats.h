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

// Interchange formats: graph6 for whole graphs, and a line-oriented text
// format for multipoles:
//
//   # comment
//   multipole <name>
//   vertices <n>
//   link <u> <v>
//   dangle <u> <label>
//   connector <label> [<label> ...]
//   end

#ifndef M3COVER_FORMATS_H_
#define M3COVER_FORMATS_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "m3cover/multipole.h"

namespace m3cover {

// Standard graph6 (no header, no trailing newline). Fails on loops and
// parallel links, which graph6 cannot express.
absl::StatusOr<std::string> EncodeGraph6(const Graph& g);

// Accepts one graph6 record, optionally preceded by the ">>graph6<<" header
// and followed by a newline. sparse6 and digraph6 records are rejected.
absl::StatusOr<Graph> DecodeGraph6(std::string_view text);

// Degree and other multipole invariants are not checked here; run Validate().
// Errors carry "line N:" prefixes.
absl::StatusOr<Multipole> ParseMultipoleText(std::string_view text);

// Canonical rendering: links in EdgeRef order, danglings and connectors in
// declaration order.
std::string EmitMultipoleText(const Multipole& m);

}  // namespace m3cover

#endif  // M3COVER_FORMATS_H_
