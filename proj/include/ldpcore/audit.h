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

// Executable checks of the facts the privacy and accuracy arguments rest
// on. Sensitivity audits are deterministic: they replay exact quantities and
// compare them, so a failure is a bug, never bad luck. The robustness checks
// take a measured error level alpha and verify the per-run consequences of
// "every noisy degree is within alpha of the truth".

#ifndef LDPCORE_AUDIT_H_
#define LDPCORE_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/counting.h"
#include "ldpcore/graph.h"
#include "ldpcore/local_sim.h"
#include "ldpcore/oracles.h"
#include "nlohmann/json.hpp"

namespace ldpcore {

struct AuditReport {
  std::string kind;
  bool pass = false;
  nlohmann::json details;
};

// Random streams of length stream_len with values in 0..3; each neighbor
// changes one element by one. Replays the exact tree nodes of both streams
// and requires that at most floor(log2 T) + 1 nodes differ, each by exactly
// one.
absl::StatusOr<AuditReport> AuditCounterSensitivity(const CounterConfig& cfg,
                                                    int64_t stream_len,
                                                    int trials, uint64_t seed);

// Exact tree node values of a stream, in step order: entry s-1 is the node
// materialized at step s.
std::vector<int64_t> ExactTreeNodes(std::span<const int64_t> stream,
                                    int64_t horizon);

// Runs the protocol on g and on g with edge {u, v} toggled, with the same
// noise, up to the first round whose deleted set differs. Passes iff every
// other vertex inserts identical streams and each endpoint's stream differs
// at most in its initial degree (by one) and in one element, by one, that
// it inserted after the other endpoint's deletion.
absl::StatusOr<AuditReport> AuditProtocolStreamDiscrepancy(
    const Graph& g, VertexId u, VertexId v, const RunConfig& cfg,
    ProtocolKind protocol);

// Online measurement of the largest |message - true degree| in a run: feed
// it every round in order, e.g. as RunOptions::observer.
class AlphaTracker {
 public:
  explicit AlphaTracker(const Graph& g);

  absl::Status Observe(const Round& round);
  double alpha() const { return alpha_; }

 private:
  const Graph* g_;
  std::vector<int64_t> degree_;
  double alpha_ = 0.0;
};

// The same measurement over a stored transcript of a run on g.
absl::StatusOr<double> MeasureAlphaObs(const Transcript& tr, const Graph& g);

// Largest amount by which some estimate leaves
// [k(v) - alpha - additive, gamma * k(v) + alpha + additive]; <= 0 when all
// estimates are inside.
double SandwichExcess(const CorenessVector& k, const EstimateVector& est,
                      double gamma, double alpha, double additive = 0.0);

// For every v with U = {u : est(u) >= est(v)}, compares the minimum induced
// degree of G[U] with est(v) / gamma - alpha - additive. Returns the largest
// shortfall; <= 0 when the clause holds for every v.
double CoreWitnessShortfall(const Graph& g, const EstimateVector& est,
                            double gamma, double alpha,
                            double additive = 0.0);

// The density guarantee for the argmax set of the estimates, assuming
// estimates within alpha: when both estimate clauses above hold, the argmax
// set has density at least k~* / (2 gamma) - (1 + 1/gamma) alpha / 2.
struct DensityGuarantee {
  bool hypotheses_hold = false;
  double bound = 0.0;
  double density = 0.0;
  bool holds = false;  // density >= bound
};

absl::StatusOr<DensityGuarantee> CheckDensityGuarantee(
    const Graph& g, const EstimateVector& est, double gamma, double alpha);

}  // namespace ldpcore

#endif  // LDPCORE_AUDIT_H_
