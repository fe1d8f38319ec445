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

#ifndef LDPCORE_GRAPH_H_
#define LDPCORE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "boost/rational.hpp"

namespace ldpcore {

using VertexId = uint32_t;
using Edge = std::pair<VertexId, VertexId>;
using Rational = boost::rational<int64_t>;

// Simple undirected graph in compressed sparse row form. Neighbor lists are
// sorted so that every iteration order is deterministic.
//
// Vertex ids range over [0, id_bound()). A graph produced by InducedSubgraph
// keeps the ids of its parent and marks the vertices outside the subset as
// non-members; non-members have no incident edges and are not counted by
// num_vertices(). Graphs are immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on vertices 0..n-1. Duplicate edges (in either
  // orientation) are merged; self-loops and out-of-range ids are rejected.
  static absl::StatusOr<Graph> FromEdges(size_t n, std::span<const Edge> edges);

  // Edgeless graph on n vertices.
  static Graph Empty(size_t n);

  size_t id_bound() const { return member_.size(); }
  size_t num_vertices() const { return num_members_; }
  size_t num_edges() const { return num_edges_; }
  bool is_full() const { return num_members_ == member_.size(); }

  bool contains(VertexId v) const {
    return v < member_.size() && member_[v] != 0;
  }

  // Sorted neighbor ids. `v` must be < id_bound().
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  size_t degree_unchecked(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  size_t max_degree() const;
  bool HasEdge(VertexId u, VertexId v) const;

  // Member vertices in increasing order.
  std::vector<VertexId> Vertices() const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> Edges() const;

  // Same vertex set with the edge {u, v} added if absent or removed if
  // present. Requires u != v, both members.
  absl::StatusOr<Graph> WithEdgeToggled(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  friend absl::StatusOr<Graph> InducedSubgraph(const Graph& g,
                                               std::span<const VertexId> u);

  std::vector<size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<uint8_t> member_;
  size_t num_members_ = 0;
  size_t num_edges_ = 0;
};

// |N_v|. Fails with InvalidArgument for ids outside the graph.
absl::StatusOr<size_t> Degree(const Graph& g, VertexId v);

// G[U] with original ids preserved; vertices outside U become non-members.
absl::StatusOr<Graph> InducedSubgraph(const Graph& g,
                                      std::span<const VertexId> u);

// Relabels the member vertices of `g` to 0..num_vertices()-1 in increasing id
// order. `original_ids`, if given, receives the new-to-old mapping.
Graph Compact(const Graph& g, std::vector<VertexId>* original_ids = nullptr);

// Edge-list text: "u v" per line, '#' comments, optional leading "n <count>".
absl::StatusOr<Graph> ParseEdgeList(std::string_view text);
absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path);
std::string FormatEdgeList(const Graph& g);

}  // namespace ldpcore

#endif  // LDPCORE_GRAPH_H_
