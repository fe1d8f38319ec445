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

// Densest subgraph by post-processing coreness estimates: return every
// vertex whose estimate equals the largest one. The subset depends on the
// estimates alone; the density is measured on the true graph and is meant
// for evaluation only.

#ifndef LDPCORE_DENSEST_H_
#define LDPCORE_DENSEST_H_

#include <vector>

#include "absl/status/statusor.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/graph.h"
#include "ldpcore/local_sim.h"

namespace ldpcore {

struct DensestResult {
  std::vector<VertexId> subset;  // sorted, nonempty
  Rational density;              // of G[subset]
  double k_tilde_star = 0.0;     // the largest estimate
};

// {v : est(v) = max est}, compared with exact equality. InvalidArgument for
// an empty vector or a missing (NaN) estimate.
absl::StatusOr<std::vector<VertexId>> ArgmaxEstimateSet(
    const EstimateVector& est);

absl::StatusOr<DensestResult> DensestFromEstimates(const Graph& g,
                                                   const EstimateVector& est);

// gamma of the underlying coreness estimate: 1 for the exact protocol and
// 2 + eta for the approximate one.
double ApproximationFactor(ProtocolKind protocol, double eta);

struct DensestRun {
  DensestResult result;
  ProtocolRun run;
};

absl::StatusOr<DensestRun> RunDensest(const Graph& g, const RunConfig& cfg,
                                      ProtocolKind protocol);

}  // namespace ldpcore

#endif  // LDPCORE_DENSEST_H_
