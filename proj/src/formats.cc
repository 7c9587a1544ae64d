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

#include "m3cover/formats.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <vector>

#include "absl/status/status.h"
#include "fmt/core.h"

namespace m3cover {

namespace {

constexpr int64_t kMaxGraph6Vertices = 68719476735;  // 2^36 - 1

void AppendSize(int64_t n, std::string* out) {
  if (n <= 62) {
    out->push_back(static_cast<char>(n + 63));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out->push_back(126);
  if (groups == 6) out->push_back(126);
  for (int g = groups - 1; g >= 0; --g) {
    out->push_back(static_cast<char>(((n >> (6 * g)) & 63) + 63));
  }
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

absl::StatusOr<std::string> EncodeGraph6(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Link& l : g.links()) {
    if (l.u == l.v) {
      return absl::InvalidArgumentError("graph6 cannot encode loops");
    }
    if (adj[l.u][l.v]) {
      return absl::InvalidArgumentError("graph6 cannot encode parallel links");
    }
    adj[l.u][l.v] = adj[l.v][l.u] = true;
  }
  std::string out;
  AppendSize(n, &out);
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

absl::StatusOr<Graph> DecodeGraph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return absl::InvalidArgumentError("empty graph6 record");
  if (text.front() == ':' || text.front() == ';') {
    return absl::InvalidArgumentError("sparse6 records are not supported");
  }
  if (text.front() == '&') {
    return absl::InvalidArgumentError("digraph6 records are not supported");
  }
  for (char c : text) {
    if (c < 63 || c > 126) {
      return absl::InvalidArgumentError(
          fmt::format("invalid graph6 byte {}", static_cast<int>(c)));
    }
  }
  size_t pos = 0;
  int64_t n = 0;
  auto read_groups = [&](int groups) -> bool {
    if (pos + groups > text.size()) return false;
    for (int g = 0; g < groups; ++g) n = (n << 6) | (text[pos++] - 63);
    return true;
  };
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    if (!read_groups(3)) return absl::InvalidArgumentError("truncated header");
  } else {
    pos = 2;
    if (!read_groups(6)) return absl::InvalidArgumentError("truncated header");
  }
  if (n > kMaxGraph6Vertices || n > 1'000'000) {
    return absl::InvalidArgumentError("graph too large");
  }
  const int64_t bit_count = n * (n - 1) / 2;
  const int64_t byte_count = (bit_count + 5) / 6;
  const int64_t available = static_cast<int64_t>(text.size() - pos);
  if (available < byte_count) {
    return absl::InvalidArgumentError(
        fmt::format("truncated bit vector: expected {} bytes, got {}", byte_count, available));
  }
  if (available > byte_count) {
    return absl::InvalidArgumentError("trailing bytes after bit vector");
  }
  std::vector<Link> links;
  int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) links.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(n), std::move(links));
}

absl::StatusOr<Multipole> ParseMultipoleText(std::string_view text) {
  std::string name;
  int vertices = -1;
  std::vector<Link> links;
  std::vector<Dangling> danglings;
  std::vector<Connector> connectors;
  std::set<std::string> labels;
  bool started = false;
  bool ended = false;
  int line_no = 0;
  size_t cursor = 0;
  while (cursor <= text.size()) {
    size_t eol = text.find('\n', cursor);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(cursor, eol - cursor);
    cursor = eol + 1;
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> tok = Tokens(line);
    if (tok.empty()) continue;
    auto error = [&](std::string_view what) {
      return absl::InvalidArgumentError(
          fmt::format("line {}: {}", line_no, what));
    };
    auto parse_int = [&](std::string_view s, int* out) {
      auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
      return ec == std::errc() && end == s.data() + s.size() && *out >= 0;
    };
    if (ended) return error("content after 'end'");
    const std::string_view kw = tok[0];
    if (!started) {
      if (kw != "multipole" || tok.size() != 2) {
        return error("expected 'multipole <name>'");
      }
      name = std::string(tok[1]);
      started = true;
      continue;
    }
    if (kw == "vertices") {
      if (vertices >= 0) return error("duplicate 'vertices'");
      if (tok.size() != 2 || !parse_int(tok[1], &vertices)) {
        return error("expected 'vertices <n>'");
      }
    } else if (kw == "link") {
      int u = 0;
      int v = 0;
      if (tok.size() != 3 || !parse_int(tok[1], &u) || !parse_int(tok[2], &v)) {
        return error("expected 'link <u> <v>'");
      }
      links.push_back({u, v});
    } else if (kw == "dangle") {
      int u = 0;
      if (tok.size() != 3 || !parse_int(tok[1], &u)) {
        return error("expected 'dangle <u> <label>'");
      }
      std::string label(tok[2]);
      if (!labels.insert(label).second) {
        return error(fmt::format("duplicate dangling label '{}'", label));
      }
      danglings.push_back({u, std::move(label)});
    } else if (kw == "connector") {
      if (tok.size() < 2) return error("connector needs at least one label");
      Connector c;
      for (size_t i = 1; i < tok.size(); ++i) c.emplace_back(tok[i]);
      connectors.push_back(std::move(c));
    } else if (kw == "end") {
      if (tok.size() != 1) return error("unexpected tokens after 'end'");
      ended = true;
    } else {
      return error(fmt::format("unknown directive '{}'", kw));
    }
  }
  if (!started) return absl::InvalidArgumentError("no 'multipole' header");
  if (!ended) {
    return absl::InvalidArgumentError(
        fmt::format("line {}: missing 'end'", line_no));
  }
  if (vertices < 0) return absl::InvalidArgumentError("missing 'vertices'");
  return Multipole(std::move(name), vertices, std::move(links),
                   std::move(danglings), std::move(connectors));
}

std::string EmitMultipoleText(const Multipole& m) {
  std::string out = fmt::format("multipole {}\nvertices {}\n", m.name().empty() ? "unnamed" : m.name(), m.vertex_count());
  for (const Link& l : m.links()) out += fmt::format("link {} {}\n", l.u, l.v);
  for (const Dangling& d : m.danglings()) {
    out += fmt::format("dangle {} {}\n", d.vertex, d.label);
  }
  for (const Connector& c : m.connectors()) {
    out += "connector";
    for (const std::string& label : c) out += fmt::format(" {}", label);
    out += "\n";
  }
  out += "end\n";
  return out;
}

}  // namespace m3cover
