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

// Slow, obviously-correct reference computations used only by the tests.
// None of them shares code with the library.

#ifndef LDPCORE_TESTS_TEST_ORACLES_H_
#define LDPCORE_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ldpcore/graph.h"

namespace ldpcore::testing {

// Adjacency matrix of a full graph.
inline std::vector<std::vector<bool>> AdjacencyMatrix(const Graph& g) {
  const size_t n = g.id_bound();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.Edges()) {
    adj[u][v] = true;
    adj[v][u] = true;
  }
  return adj;
}

// Minimum degree inside the vertex subset `mask` (bit i = vertex i).
inline int MinInducedDegree(const std::vector<std::vector<bool>>& adj,
                            uint32_t mask) {
  int best = -1;
  const size_t n = adj.size();
  for (size_t v = 0; v < n; ++v) {
    if (!(mask >> v & 1)) continue;
    int d = 0;
    for (size_t u = 0; u < n; ++u) {
      if ((mask >> u & 1) && adj[v][u]) ++d;
    }
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// Coreness by definition: the largest min induced degree over all vertex
// subsets containing v. Exponential; n <= 16.
inline std::vector<uint32_t> BruteForceCoreness(const Graph& g) {
  const size_t n = g.id_bound();
  const auto adj = AdjacencyMatrix(g);
  std::vector<uint32_t> k(n, 0);
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    const int m = MinInducedDegree(adj, mask);
    for (size_t v = 0; v < n; ++v) {
      if ((mask >> v & 1) && static_cast<uint32_t>(m) > k[v]) k[v] = m;
    }
  }
  return k;
}

// Coreness by naive peeling: repeatedly remove one vertex of minimum
// remaining degree, scanning all vertices each time. O(n^2 + m).
inline std::vector<uint32_t> NaivePeelingCoreness(const Graph& g) {
  const size_t n = g.id_bound();
  std::vector<int64_t> deg(n, 0);
  std::vector<bool> gone(n, true);
  for (VertexId v : g.Vertices()) {
    gone[v] = false;
    for (VertexId u : g.neighbors(v)) {
      if (u != v) ++deg[v];
    }
  }
  std::vector<uint32_t> k(n, 0);
  int64_t level = 0;
  for (size_t left = g.num_vertices(); left > 0; --left) {
    size_t best = n;
    for (size_t v = 0; v < n; ++v) {
      if (!gone[v] && (best == n || deg[v] < deg[best])) best = v;
    }
    level = std::max(level, deg[best]);
    k[best] = static_cast<uint32_t>(level);
    gone[best] = true;
    for (VertexId u : g.neighbors(static_cast<VertexId>(best))) {
      if (!gone[u]) --deg[u];
    }
  }
  return k;
}

// Largest |E(U)| / |U| over nonempty U, as (edges, vertices) maximizing the
// ratio. Exponential; n <= 16.
inline std::pair<int64_t, int64_t> BruteForceDensity(const Graph& g) {
  const size_t n = g.id_bound();
  const auto adj = AdjacencyMatrix(g);
  std::pair<int64_t, int64_t> best{0, 1};
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    int64_t e = 0;
    int64_t size = 0;
    for (size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      ++size;
      for (size_t u = v + 1; u < n; ++u) {
        if ((mask >> u & 1) && adj[v][u]) ++e;
      }
    }
    if (e * best.second > best.first * size) best = {e, size};
  }
  return best;
}

// Running sums of `xs`.
inline std::vector<int64_t> PrefixSums(const std::vector<int64_t>& xs) {
  std::vector<int64_t> out;
  int64_t s = 0;
  for (int64_t x : xs) out.push_back(s += x);
  return out;
}

// Steps s in 1..len whose dyadic block (s - 2^lsb(s), s] contains position
// p (1-based). These are the tree nodes an input at p is counted in.
inline std::vector<int64_t> DyadicCoveringSteps(int64_t p, int64_t len) {
  std::vector<int64_t> steps;
  for (int64_t s = 1; s <= len; ++s) {
    const int64_t block = s & -s;
    if (s - block < p && p <= s) steps.push_back(s);
  }
  return steps;
}

}  // namespace ldpcore::testing

#endif  // LDPCORE_TESTS_TEST_ORACLES_H_
