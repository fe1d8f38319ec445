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

// Exact, non-private ground truth: coreness by peeling, density, and
// exhaustive densest subgraph.

#ifndef LDPCORE_ORACLES_H_
#define LDPCORE_ORACLES_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "ldpcore/graph.h"

namespace ldpcore {

// One entry per vertex id; non-members of a masked graph get 0.
using CorenessVector = std::vector<uint32_t>;

// Largest vertex count accepted by BruteForceDensest.
inline constexpr size_t kMaxBruteForceVertices = 20;

// Matula-Beck peeling: repeatedly removes a vertex of minimum current degree;
// the coreness of a removed vertex is the largest minimum degree observed up
// to its removal. Runs in O(n + m) with bucketed degrees.
CorenessVector ExactCoreness(const Graph& g);

// k* = max coreness, 0 for a graph without members.
uint32_t MaxCoreness(const CorenessVector& k);

// |E| / |V| over member vertices. InvalidArgument if there are none.
absl::StatusOr<Rational> Density(const Graph& g);

struct DensestSubgraph {
  std::vector<VertexId> subset;  // sorted
  Rational density;
};

// Exhaustive search over nonempty member subsets. Among subsets of maximum
// density, returns one of minimum size, then the lexicographically smallest.
// Fails with OutOfRange above kMaxBruteForceVertices members.
absl::StatusOr<DensestSubgraph> BruteForceDensest(const Graph& g);

// {v : k(v) = k*}. InvalidArgument for a graph without members.
absl::StatusOr<std::vector<VertexId>> MaxCorenessCore(const Graph& g);

}  // namespace ldpcore

#endif  // LDPCORE_ORACLES_H_
