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

#include "ldpcore/core_approx.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"

namespace ldpcore {
namespace {

// Smallest k >= 1 with base^k >= n. Multiplying up avoids the rounding of
// log(n) / log(base) at exact powers.
int CeilLog(double base, int64_t n) {
  int k = 1;
  for (double p = base; p < static_cast<double>(n); p *= base) ++k;
  return k;
}

}  // namespace

absl::StatusOr<PhaseSchedule> BuildSchedule(int64_t n, double eta,
                                            int64_t phase_rounds) {
  if (!(eta > 0) || !std::isfinite(eta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("eta must be positive, got ", eta));
  }
  if (n < 0 || phase_rounds < 0) {
    return absl::InvalidArgumentError("schedule sizes must be nonnegative");
  }
  PhaseSchedule s;
  s.eta = eta;
  s.phases = CeilLog(2 + eta, n) + 1;
  s.rounds_per_phase = phase_rounds > 0 ? phase_rounds : CeilLog(1 + eta, n);
  double power = 1.0;
  for (int p = 1; p <= s.phases; ++p) {
    power *= 2 + eta;
    s.thresholds.push_back(power);
    s.labels.push_back(power);
  }
  s.final_label = s.labels.back();
  return s;
}

ApproxServer::ApproxServer(size_t num_vertices, PhaseSchedule schedule)
    : schedule_(std::move(schedule)) {
  estimates_.values.assign(num_vertices,
                           std::numeric_limits<double>::quiet_NaN());
  estimates_.round_assigned.assign(num_vertices, 0);
  estimates_.phase.assign(num_vertices, 0);
}

absl::StatusOr<std::vector<VertexId>> ApproxServer::Decide(
    int64_t t, std::span<const UserMessage> messages) {
  if (t < 1 || t > schedule_.total_rounds()) {
    return absl::OutOfRangeError(absl::StrCat(
        "round ", t, " is outside the schedule of ", schedule_.total_rounds(),
        " rounds"));
  }
  const int phase = schedule_.PhaseOfRound(t);
  const double threshold = schedule_.thresholds[phase - 1];
  std::vector<VertexId> deleted;
  for (const UserMessage& m : messages) {
    if (m.value <= threshold) {
      deleted.push_back(m.vertex);
      estimates_.values[m.vertex] = schedule_.labels[phase - 1];
      estimates_.round_assigned[m.vertex] = t;
      estimates_.phase[m.vertex] = phase;
    }
  }
  return deleted;
}

void ApproxServer::LabelSurvivors(const Transcript& tr) {
  for (VertexId v = 0; v < tr.num_vertices(); ++v) {
    if (tr.deletion_round(v) == 0 && std::isnan(estimates_.values[v])) {
      estimates_.values[v] = schedule_.final_label;
      estimates_.phase[v] = schedule_.phases + 1;
    }
  }
}

absl::StatusOr<ProtocolRun> RunApproxCore(const Graph& g,
                                          const RunConfig& cfg,
    const RunOptions& options) {
  if (absl::Status st = ValidateRunConfig(cfg, ProtocolKind::kApprox);
      !st.ok()) {
    return st;
  }
  absl::StatusOr<PhaseSchedule> schedule = BuildSchedule(
      static_cast<int64_t>(g.num_vertices()), cfg.eta, cfg.phase_rounds);
  if (!schedule.ok()) return schedule.status();
  const int64_t horizon = schedule->total_rounds();
  if (cfg.memory == MemoryMode::kMemoryless && !options.keep_messages) {
    return absl::InvalidArgumentError(
        "memoryless users need a transcript that keeps messages");
  }
  absl::StatusOr<std::unique_ptr<NoisyDegreeUser>> user =
      NoisyDegreeUser::Create(cfg, g.id_bound(), horizon);
  if (!user.ok()) return user.status();
  ApproxServer server(g.id_bound(), *std::move(schedule));
  const int64_t max_rounds = cfg.max_rounds > 0 ? cfg.max_rounds : horizon;
  absl::StatusOr<Transcript> tr = RunProtocol(g, max_rounds, server, **user, options);
  if (!tr.ok()) return tr.status();
  server.LabelSurvivors(*tr);
  return ProtocolRun{server.estimates(), *std::move(tr)};
}

}  // namespace ldpcore
