// Copyright 2026 The ldpcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "ldpcore/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "absl/strings/ascii.h"

namespace ldpcore {
namespace {

// Builds the CSR arrays from a list of undirected edges that is already
// validated (no loops, ids in range). Duplicates are removed here.
void FillCsr(size_t n, std::vector<Edge> edges, std::vector<size_t>& offsets,
             std::vector<VertexId>& adjacency, size_t& num_edges) {
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  num_edges = edges.size();

  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[e.first + 1];
    ++offsets[e.second + 1];
  }
  for (size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  adjacency.assign(offsets[n], 0);
  std::vector<size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    adjacency[cursor[e.first]++] = e.second;
    adjacency[cursor[e.second]++] = e.first;
  }
  for (size_t v = 0; v < n; ++v) {
    std::sort(adjacency.begin() + offsets[v], adjacency.begin() + offsets[v + 1]);
  }
}

std::optional<uint64_t> ParseUint(absl::string_view s) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

absl::StatusOr<Graph> Graph::FromEdges(size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<VertexId>::max()) {
    return absl::InvalidArgumentError(
        absl::StrCat("vertex count ", n, " exceeds the id range"));
  }
  for (const Edge& e : edges) {
    if (e.first >= n || e.second >= n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge {", e.first, ",", e.second, "} references a vertex >= ", n));
    }
    if (e.first == e.second) {
      return absl::InvalidArgumentError(
          absl::StrCat("self-loop at vertex ", e.first));
    }
  }
  Graph g;
  g.member_.assign(n, 1);
  g.num_members_ = n;
  FillCsr(n, std::vector<Edge>(edges.begin(), edges.end()), g.offsets_,
          g.adjacency_, g.num_edges_);
  return g;
}

Graph Graph::Empty(size_t n) {
  Graph g;
  g.member_.assign(n, 1);
  g.num_members_ = n;
  g.offsets_.assign(n + 1, 0);
  return g;
}

size_t Graph::max_degree() const {
  size_t best = 0;
  for (size_t v = 0; v < id_bound(); ++v) {
    best = std::max(best, degree_unchecked(static_cast<VertexId>(v)));
  }
  return best;
}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  if (u >= id_bound() || v >= id_bound()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<VertexId> Graph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_members_);
  for (size_t v = 0; v < id_bound(); ++v) {
    if (member_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (size_t u = 0; u < id_bound(); ++u) {
    for (VertexId v : neighbors(static_cast<VertexId>(u))) {
      if (u < v) out.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return out;
}

absl::StatusOr<Graph> Graph::WithEdgeToggled(VertexId u, VertexId v) const {
  if (u == v) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot toggle a self-loop at ", u));
  }
  if (!contains(u) || !contains(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge {", u, ",", v, "} is outside the graph"));
  }
  std::vector<Edge> edges = Edges();
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e) {
    edges.erase(it);
  } else {
    edges.insert(it, e);
  }
  Graph g;
  g.member_ = member_;
  g.num_members_ = num_members_;
  FillCsr(id_bound(), std::move(edges), g.offsets_, g.adjacency_,
          g.num_edges_);
  return g;
}

absl::StatusOr<size_t> Degree(const Graph& g, VertexId v) {
  if (!g.contains(v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("vertex ", v, " is not in the graph"));
  }
  return g.degree_unchecked(v);
}

absl::StatusOr<Graph> InducedSubgraph(const Graph& g,
                                      std::span<const VertexId> u) {
  std::vector<uint8_t> keep(g.id_bound(), 0);
  for (VertexId v : u) {
    if (!g.contains(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", v, " is not in the graph"));
    }
    keep[v] = 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.Edges()) {
    if (keep[e.first] && keep[e.second]) edges.push_back(e);
  }
  Graph h;
  h.num_members_ = static_cast<size_t>(std::count(keep.begin(), keep.end(), 1));
  h.member_ = std::move(keep);
  FillCsr(g.id_bound(), std::move(edges), h.offsets_, h.adjacency_,
          h.num_edges_);
  return h;
}

Graph Compact(const Graph& g, std::vector<VertexId>* original_ids) {
  std::vector<VertexId> ids = g.Vertices();
  std::vector<VertexId> new_id(g.id_bound(), 0);
  for (size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.Edges()) {
    edges.emplace_back(new_id[e.first], new_id[e.second]);
  }
  if (original_ids != nullptr) *original_ids = ids;
  // Relabeled edges are valid by construction.
  return *Graph::FromEdges(ids.size(), edges);
}

absl::StatusOr<Graph> ParseEdgeList(std::string_view text) {
  std::vector<Edge> edges;
  uint64_t declared = 0;
  bool seen_content = false;
  uint64_t max_id_plus_one = 0;
  int line_no = 0;
  // absl may be built with its own string_view type.
  const absl::string_view input(text.data(), text.size());
  for (absl::string_view raw : absl::StrSplit(input, '\n')) {
    ++line_no;
    absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (fields.size() != 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected two fields, got \"", line, "\""));
    }
    if (!seen_content && fields[0] == "n") {
      seen_content = true;
      auto count = ParseUint(fields[1]);
      if (!count) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": bad vertex count \"", fields[1], "\""));
      }
      declared = *count;
      continue;
    }
    seen_content = true;
    auto u = ParseUint(fields[0]);
    auto v = ParseUint(fields[1]);
    if (!u || !v || *u > std::numeric_limits<VertexId>::max() ||
        *v > std::numeric_limits<VertexId>::max()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": bad vertex id in \"", line, "\""));
    }
    if (*u == *v) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": self-loop at vertex ", *u));
    }
    if (declared > 0 && std::max(*u, *v) >= declared) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": vertex id exceeds declared n=",
                       declared));
    }
    max_id_plus_one = std::max(max_id_plus_one, std::max(*u, *v) + 1);
    edges.emplace_back(static_cast<VertexId>(*u), static_cast<VertexId>(*v));
  }
  return Graph::FromEdges(std::max(declared, max_id_plus_one), edges);
}

absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open graph file ", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto g = ParseEdgeList(buffer.str());
  if (!g.ok()) {
    return absl::Status(g.status().code(),
                        absl::StrCat(path, ": ", g.status().message()));
  }
  return g;
}

std::string FormatEdgeList(const Graph& g) {
  std::string out = absl::StrCat("n ", g.id_bound(), "\n");
  for (const Edge& e : g.Edges()) {
    absl::StrAppend(&out, e.first, " ", e.second, "\n");
  }
  return out;
}

}  // namespace ldpcore
