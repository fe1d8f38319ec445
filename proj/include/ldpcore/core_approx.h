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

// (2+eta)-approximate coreness in O(log n * log_{1+eta} n) rounds.
//
// The rounds are grouped into Phi phases of R rounds. In every round of
// phase p the server deletes the active users whose noisy degree is at most
// (2+eta)^p and labels them (2+eta)^p. Users that survive the last phase get
// the final label (2+eta)^Phi. Noisy degrees are produced exactly as in the
// exact protocol, with counters of horizon Phi * R.

#ifndef LDPCORE_CORE_APPROX_H_
#define LDPCORE_CORE_APPROX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/graph.h"
#include "ldpcore/local_sim.h"

namespace ldpcore {

struct PhaseSchedule {
  double eta = 1.0;
  int phases = 1;            // Phi
  int64_t rounds_per_phase = 1;  // R
  // Index p-1 holds phase p's deletion threshold and estimate label.
  std::vector<double> thresholds;
  std::vector<double> labels;
  double final_label = 1.0;  // for users that outlive every phase

  int64_t total_rounds() const { return phases * rounds_per_phase; }
  // Phase of round t, 1-based.
  int PhaseOfRound(int64_t t) const {
    return static_cast<int>((t - 1) / rounds_per_phase) + 1;
  }
};

// Phi = ceil(log_{2+eta} n) + 1 and R = ceil(log_{1+eta} n), both at least
// 1. A positive `phase_rounds` replaces R.
absl::StatusOr<PhaseSchedule> BuildSchedule(int64_t n, double eta,
                                            int64_t phase_rounds = 0);

class ApproxServer final : public ServerLogic {
 public:
  ApproxServer(size_t num_vertices, PhaseSchedule schedule);

  absl::StatusOr<std::vector<VertexId>> Decide(
      int64_t t, std::span<const UserMessage> messages) override;
  bool Finished(int64_t t) const override {
    return t >= schedule_.total_rounds();
  }

  // Labels the users still active when the schedule ran out; they get
  // phase Phi + 1 and round 0.
  void LabelSurvivors(const Transcript& tr);

  const EstimateVector& estimates() const { return estimates_; }
  const PhaseSchedule& schedule() const { return schedule_; }

 private:
  PhaseSchedule schedule_;
  EstimateVector estimates_;
};

absl::StatusOr<ProtocolRun> RunApproxCore(const Graph& g, const RunConfig& cfg,
                                   const RunOptions& options = {});

}  // namespace ldpcore

#endif  // LDPCORE_CORE_APPROX_H_
