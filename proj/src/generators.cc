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

#include "ldpcore/generators.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldpcore/rng.h"

namespace ldpcore {
namespace {

constexpr int kMaxRegularRestarts = 10000;
constexpr int kRandomPairTries = 64;

// One attempt at a simple d-regular pairing. Returns false if the remaining
// points admit no valid pair.
bool TryRegularPairing(size_t n, size_t d, SeededRng& rng,
                       std::vector<Edge>& edges) {
  std::vector<VertexId> points;
  points.reserve(n * d);
  for (size_t v = 0; v < n; ++v) {
    for (size_t j = 0; j < d; ++j) points.push_back(static_cast<VertexId>(v));
  }
  std::set<Edge> used;
  edges.clear();
  auto valid = [&](VertexId a, VertexId b) {
    if (a == b) return false;
    return used.count(a < b ? Edge{a, b} : Edge{b, a}) == 0;
  };
  auto take = [&](size_t i, size_t j) {
    VertexId a = points[i], b = points[j];
    used.insert(a < b ? Edge{a, b} : Edge{b, a});
    edges.emplace_back(std::min(a, b), std::max(a, b));
    // Remove the higher index first so the lower one stays valid.
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  };

  while (!points.empty()) {
    bool matched = false;
    for (int attempt = 0; attempt < kRandomPairTries; ++attempt) {
      size_t i = rng.Below(points.size());
      size_t j = rng.Below(points.size());
      if (i != j && valid(points[i], points[j])) {
        take(i, j);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // Random probing failed; enumerate the valid pairs among the remaining
    // points and pick one uniformly, or report a dead end.
    std::vector<std::pair<size_t, size_t>> candidates;
    for (size_t i = 0; i < points.size(); ++i) {
      for (size_t j = i + 1; j < points.size(); ++j) {
        if (valid(points[i], points[j])) candidates.emplace_back(i, j);
      }
    }
    if (candidates.empty()) return false;
    auto [i, j] = candidates[rng.Below(candidates.size())];
    take(i, j);
  }
  return true;
}

}  // namespace

absl::StatusOr<Graph> GenGnp(size_t n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge probability must lie in [0, 1], got ", p));
  }
  std::vector<Edge> edges;
  if (p == 1.0) {
    for (size_t u = 0; u < n; ++u) {
      for (size_t v = u + 1; v < n; ++v) {
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  } else if (p > 0.0 && n > 1) {
    // Geometric skipping over the lower triangle (Batagelj-Brandes).
    SeededRng rng(DeriveSeed(seed, {0x676e70}));
    const double log_q = std::log1p(-p);
    int64_t v = 1;
    int64_t w = -1;
    const int64_t nn = static_cast<int64_t>(n);
    while (v < nn) {
      const double r = rng.Uniform();
      w += 1 + static_cast<int64_t>(std::floor(std::log(r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) {
        edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
      }
    }
  }
  return Graph::FromEdges(n, edges);
}

absl::StatusOr<Graph> GenRegular(size_t n, size_t d, uint64_t seed) {
  if (d >= n && !(n == 0 && d == 0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("no simple ", d, "-regular graph on ", n, " vertices"));
  }
  if ((n * d) % 2 != 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "n*d must be even for a ", d, "-regular graph, got n=", n));
  }
  SeededRng rng(DeriveSeed(seed, {0x726567}));
  std::vector<Edge> edges;
  for (int restart = 0; restart < kMaxRegularRestarts; ++restart) {
    if (TryRegularPairing(n, d, rng, edges)) return Graph::FromEdges(n, edges);
  }
  return absl::ResourceExhaustedError(absl::StrCat(
      "pairing model did not produce a simple ", d, "-regular graph on ", n,
      " vertices within ", kMaxRegularRestarts, " restarts"));
}

absl::StatusOr<Graph> GenPath(size_t n) {
  if (n == 0) return absl::InvalidArgumentError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v + 1));
  }
  return Graph::FromEdges(n, edges);
}

size_t QueryGraphSpec::InnerProduct() const {
  size_t ip = 0;
  for (size_t i = 0; i < secret.size() && i < query.size(); ++i) {
    ip += (secret[i] && query[i]) ? 1 : 0;
  }
  return ip;
}

absl::StatusOr<QueryGraphSpec> ParseQueryGraphSpec(std::string_view secret,
                                                   std::string_view query) {
  auto parse = [](std::string_view bits,
                  std::string_view name) -> absl::StatusOr<std::vector<uint8_t>> {
    std::vector<uint8_t> out;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        return absl::InvalidArgumentError(
            absl::StrCat(std::string(name), " must be a 0/1 string, got \"",
                         std::string(bits), "\""));
      }
      out.push_back(c == '1' ? 1 : 0);
    }
    return out;
  };
  QueryGraphSpec spec;
  auto x = parse(secret, "X");
  if (!x.ok()) return x.status();
  auto q = parse(query, "Q");
  if (!q.ok()) return q.status();
  spec.secret = *std::move(x);
  spec.query = *std::move(q);
  if (spec.secret.size() != spec.query.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "X and Q must have equal length, got ", spec.secret.size(), " and ",
        spec.query.size()));
  }
  return spec;
}

absl::StatusOr<Graph> GenQueryGraph(const QueryGraphSpec& spec) {
  const size_t n = spec.half_size();
  if (spec.query.size() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "X and Q must have equal length, got ", n, " and ", spec.query.size()));
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < n; ++i) {
    if (spec.secret[i]) edges.emplace_back(spec.x_vertex(), spec.a_vertex(i));
    if (spec.query[i]) {
      for (size_t j = 0; j < n; ++j) {
        edges.emplace_back(spec.a_vertex(i), spec.b_vertex(j));
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(spec.b_vertex(i), spec.b_vertex(j));
    }
  }
  return Graph::FromEdges(spec.num_vertices(), edges);
}

absl::StatusOr<std::pair<Graph, Graph>> NeighboringPair(const Graph& g,
                                                        VertexId u, VertexId v) {
  auto toggled = g.WithEdgeToggled(u, v);
  if (!toggled.ok()) return toggled.status();
  return std::make_pair(g, *std::move(toggled));
}

}  // namespace ldpcore
