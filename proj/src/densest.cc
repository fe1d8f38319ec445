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

#include "ldpcore/densest.h"

#include <algorithm>
#include <cmath>

#include "ldpcore/core_approx.h"
#include "ldpcore/oracles.h"

namespace ldpcore {

absl::StatusOr<std::vector<VertexId>> ArgmaxEstimateSet(
    const EstimateVector& est) {
  if (est.values.empty()) {
    return absl::InvalidArgumentError("empty estimate vector");
  }
  for (double value : est.values) {
    if (std::isnan(value)) {
      return absl::InvalidArgumentError("estimate vector has a gap");
    }
  }
  const double top = *std::max_element(est.values.begin(), est.values.end());
  std::vector<VertexId> subset;
  for (VertexId v = 0; v < est.values.size(); ++v) {
    if (est.values[v] == top) subset.push_back(v);
  }
  return subset;
}

absl::StatusOr<DensestResult> DensestFromEstimates(const Graph& g,
                                                   const EstimateVector& est) {
  if (est.size() != g.id_bound()) {
    return absl::InvalidArgumentError("estimates do not cover the graph");
  }
  absl::StatusOr<std::vector<VertexId>> subset = ArgmaxEstimateSet(est);
  if (!subset.ok()) return subset.status();
  absl::StatusOr<Graph> induced = InducedSubgraph(g, *subset);
  if (!induced.ok()) return induced.status();
  absl::StatusOr<Rational> density = Density(*induced);
  if (!density.ok()) return density.status();
  DensestResult result;
  result.k_tilde_star = est.values[subset->front()];
  result.subset = *std::move(subset);
  result.density = *density;
  return result;
}

double ApproximationFactor(ProtocolKind protocol, double eta) {
  return protocol == ProtocolKind::kExact ? 1.0 : 2.0 + eta;
}

absl::StatusOr<DensestRun> RunDensest(const Graph& g, const RunConfig& cfg,
                                      ProtocolKind protocol) {
  absl::StatusOr<ProtocolRun> run = protocol == ProtocolKind::kExact
                                        ? RunExactCore(g, cfg)
                                        : RunApproxCore(g, cfg);
  if (!run.ok()) return run.status();
  absl::StatusOr<DensestResult> result =
      DensestFromEstimates(g, run->estimates);
  if (!result.ok()) return result.status();
  return DensestRun{*std::move(result), *std::move(run)};
}

}  // namespace ldpcore
