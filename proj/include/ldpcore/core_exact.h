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

// Locally private coreness estimation by noisy peeling.
//
// Each user releases its degree once with Lap(4/epsilon) noise and then
// tracks how many of its neighbors the server has deleted with a private
// continual counter (budget epsilon/2). Its noisy current degree is the
// noisy initial degree minus the counter's release. The server keeps a
// running level d, raises it to the smallest noisy degree among the active
// users, deletes every active user at or below it and records d as their
// estimate.

#ifndef LDPCORE_CORE_EXACT_H_
#define LDPCORE_CORE_EXACT_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldpcore/counting.h"
#include "ldpcore/graph.h"
#include "ldpcore/local_sim.h"
#include "ldpcore/noise.h"

namespace ldpcore {

// Per-vertex protocol output.
struct EstimateVector {
  std::vector<double> values;          // k~(v)
  std::vector<int64_t> round_assigned;  // round in which v was deleted
  std::vector<int32_t> phase;          // approximate protocol only, else 0

  size_t size() const { return values.size(); }
};

// max(0, round(k~)), for display.
int64_t DisplayEstimate(double value);

// Laplace scale of the initial noisy degree.
double InitialDegreeScale(double epsilon);
// Privacy budget of each user's continual counter.
double CounterBudget(double epsilon);

struct ServerStep {
  double d = 0.0;
  std::vector<VertexId> deleted;
};

// One step of the server: d' = max(d, min message), S = {messages <= d'}.
// `alive` must be sorted; a message must arrive from every alive vertex and
// from no other.
absl::StatusOr<ServerStep> ExactServerStep(double d,
                                           std::span<const VertexId> alive,
                                           std::span<const UserMessage> msgs);

// Round t >= 2 of a memoryful user: inserts |N_v ∩ S_prev| (both sorted)
// and returns d1 minus the counter's release.
absl::StatusOr<UserMessage> ExactUserStep(std::span<const VertexId> neighbors,
                                          std::span<const VertexId> s_prev,
                                          AdaptiveCounter& counter, double d1);

// User side shared by both protocols. Noise labels depend only on the
// vertex and the round, so the two memory modes draw identical noise.
class NoisyDegreeUser final : public UserLogic {
 public:
  // `horizon` is the counter horizon T.
  static absl::StatusOr<std::unique_ptr<NoisyDegreeUser>> Create(
      const RunConfig& cfg, size_t num_vertices, int64_t horizon);

  absl::StatusOr<UserMessage> Report(VertexId v,
                                     std::span<const VertexId> neighbors,
                                     const Transcript& tr) override;

  // Number of counter insertions performed so far, over all users.
  int64_t insertions() const { return insertions_; }

 private:
  NoisyDegreeUser(const RunConfig& cfg, CounterConfig counter_cfg);

  absl::StatusOr<UserMessage> ReportMemoryless(
      VertexId v, std::span<const VertexId> neighbors, const Transcript& tr);

  RunConfig cfg_;
  CounterConfig counter_cfg_;
  NoiseSource noise_;
  int64_t insertions_ = 0;
  // Memoryful state; stays empty in memoryless mode.
  std::vector<std::unique_ptr<AdaptiveCounter>> counters_;
  std::vector<double> d1_;
};

class ExactServer final : public ServerLogic {
 public:
  explicit ExactServer(size_t num_vertices);

  absl::StatusOr<std::vector<VertexId>> Decide(
      int64_t t, std::span<const UserMessage> messages) override;

  const EstimateVector& estimates() const { return estimates_; }
  // d after each round.
  const std::vector<double>& level_history() const { return levels_; }

 private:
  double d_ = 0.0;
  EstimateVector estimates_;
  std::vector<double> levels_;
  std::vector<VertexId> alive_scratch_;
};

struct ProtocolRun {
  EstimateVector estimates;
  Transcript transcript;
};

// At most n rounds, or cfg.max_rounds when that is nonzero.
absl::StatusOr<ProtocolRun> RunExactCore(const Graph& g, const RunConfig& cfg,
                                   const RunOptions& options = {});

}  // namespace ldpcore

#endif  // LDPCORE_CORE_EXACT_H_
