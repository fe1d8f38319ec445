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

// Seeded graph families. Every generator is a pure function of its
// parameters and seed; the same call returns the same graph on every
// platform (no std distributions are involved).

#ifndef LDPCORE_GENERATORS_H_
#define LDPCORE_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ldpcore/graph.h"

namespace ldpcore {

// Erdos-Renyi G(n, p).
absl::StatusOr<Graph> GenGnp(size_t n, double p, uint64_t seed);

// Uniform-ish simple d-regular graph via the pairing model: points are
// matched one random pair at a time, pairs that would create a loop or a
// multi-edge are redrawn, and a pairing that gets stuck is restarted.
// Requires d < n and n*d even.
absl::StatusOr<Graph> GenRegular(size_t n, size_t d, uint64_t seed);

// Path 0-1-...-(n-1).
absl::StatusOr<Graph> GenPath(size_t n);

// Inner-product gadget graph G_X(Q) on 2n+1 vertices. Vertex layout:
// x = 0, a_i = 1 + i, b_i = n + 1 + i for i in [0, n).
struct QueryGraphSpec {
  std::vector<uint8_t> secret;  // X: X_i = 1 iff a_i ~ x
  std::vector<uint8_t> query;   // Q: Q_i = 1 iff a_i ~ every b

  size_t half_size() const { return secret.size(); }
  size_t num_vertices() const { return 2 * secret.size() + 1; }
  VertexId x_vertex() const { return 0; }
  VertexId a_vertex(size_t i) const { return static_cast<VertexId>(1 + i); }
  VertexId b_vertex(size_t i) const {
    return static_cast<VertexId>(secret.size() + 1 + i);
  }
  // <Q, X>
  size_t InnerProduct() const;
};

// Parses "0110"-style bit strings into a spec; lengths must agree.
absl::StatusOr<QueryGraphSpec> ParseQueryGraphSpec(std::string_view secret,
                                                   std::string_view query);

absl::StatusOr<Graph> GenQueryGraph(const QueryGraphSpec& spec);

// (g, g with {u, v} toggled).
absl::StatusOr<std::pair<Graph, Graph>> NeighboringPair(const Graph& g,
                                                        VertexId u, VertexId v);

}  // namespace ldpcore

#endif  // LDPCORE_GENERATORS_H_
