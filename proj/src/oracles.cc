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

#include "ldpcore/oracles.h"

#include <algorithm>
#include <bit>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ldpcore {

CorenessVector ExactCoreness(const Graph& g) {
  const size_t n = g.id_bound();
  CorenessVector core(n, 0);
  if (g.num_vertices() == 0) return core;

  // Bucket queue keyed by current degree (Batagelj-Zaversnik layout).
  const size_t max_deg = g.max_degree();
  std::vector<size_t> degree(n, 0);
  std::vector<size_t> bin(max_deg + 2, 0);
  std::vector<VertexId> order;
  order.reserve(g.num_vertices());
  for (VertexId v : g.Vertices()) {
    degree[v] = g.degree_unchecked(v);
    ++bin[degree[v]];
  }
  size_t start = 0;
  for (size_t d = 0; d <= max_deg; ++d) {
    size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<size_t> position(n, 0);
  order.assign(g.num_vertices(), 0);
  for (VertexId v : g.Vertices()) {
    position[v] = bin[degree[v]]++;
    order[position[v]] = v;
  }
  for (size_t d = max_deg + 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  std::vector<uint8_t> removed(n, 0);
  size_t running_min = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    // `order[i]` has minimum degree among the remaining vertices; the peeling
    // level only ever rises.
    running_min = std::max(running_min, degree[v]);
    core[v] = static_cast<uint32_t>(running_min);
    removed[v] = 1;
    for (VertexId u : g.neighbors(v)) {
      if (removed[u] || degree[u] <= degree[v]) continue;
      const size_t du = degree[u];
      const size_t pu = position[u];
      const size_t pw = bin[du];
      const VertexId w = order[pw];
      if (u != w) {
        position[u] = pw;
        order[pu] = w;
        position[w] = pu;
        order[pw] = u;
      }
      ++bin[du];
      --degree[u];
    }
  }
  return core;
}

uint32_t MaxCoreness(const CorenessVector& k) {
  return k.empty() ? 0 : *std::max_element(k.begin(), k.end());
}

absl::StatusOr<Rational> Density(const Graph& g) {
  if (g.num_vertices() == 0) {
    return absl::InvalidArgumentError("density of an empty vertex set");
  }
  return Rational(static_cast<int64_t>(g.num_edges()),
                  static_cast<int64_t>(g.num_vertices()));
}

absl::StatusOr<DensestSubgraph> BruteForceDensest(const Graph& g) {
  const std::vector<VertexId> ids = g.Vertices();
  const size_t k = ids.size();
  if (k == 0) {
    return absl::InvalidArgumentError("densest subgraph of an empty graph");
  }
  if (k > kMaxBruteForceVertices) {
    return absl::OutOfRangeError(absl::StrCat(
        "brute-force densest subgraph supports at most ",
        kMaxBruteForceVertices, " vertices, got ", k));
  }
  // Bit i of adj[j] is set iff ids[i] ~ ids[j].
  std::vector<uint32_t> adj(k, 0);
  for (size_t j = 0; j < k; ++j) {
    for (size_t i = 0; i < k; ++i) {
      if (g.HasEdge(ids[j], ids[i])) adj[j] |= 1u << i;
    }
  }

  // Lexicographic order on sorted vertex lists: the list whose first
  // differing element is smaller wins. For equal-size sets that is the set
  // containing the smallest element of the symmetric difference.
  auto lex_less = [](uint32_t a, uint32_t b) {
    const uint32_t diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  };

  uint32_t best_mask = 0;
  int64_t best_edges = -1;
  int64_t best_size = 1;
  const uint32_t limit = k == 32 ? 0 : (1u << k);
  for (uint32_t mask = 1; mask != limit; ++mask) {
    int64_t twice_edges = 0;
    for (uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      twice_edges += std::popcount(adj[j] & mask);
    }
    const int64_t edges = twice_edges / 2;
    const int64_t size = std::popcount(mask);
    // Compare edges/size against best_edges/best_size exactly.
    const int64_t lhs = edges * best_size;
    const int64_t rhs = best_edges * size;
    bool better = false;
    if (best_edges < 0 || lhs > rhs) {
      better = true;
    } else if (lhs == rhs) {
      better = size < best_size || (size == best_size && lex_less(mask, best_mask));
    }
    if (better) {
      best_mask = mask;
      best_edges = edges;
      best_size = size;
    }
  }

  DensestSubgraph result;
  for (size_t i = 0; i < k; ++i) {
    if (best_mask & (1u << i)) result.subset.push_back(ids[i]);
  }
  result.density = Rational(best_edges, best_size);
  return result;
}

absl::StatusOr<std::vector<VertexId>> MaxCorenessCore(const Graph& g) {
  if (g.num_vertices() == 0) {
    return absl::InvalidArgumentError("max-coreness core of an empty graph");
  }
  const CorenessVector k = ExactCoreness(g);
  uint32_t k_star = 0;
  for (VertexId v : g.Vertices()) k_star = std::max(k_star, k[v]);
  std::vector<VertexId> out;
  for (VertexId v : g.Vertices()) {
    if (k[v] == k_star) out.push_back(v);
  }
  return out;
}

}  // namespace ldpcore
