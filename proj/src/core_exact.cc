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

#include "ldpcore/core_exact.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace ldpcore {
namespace {

// |a ∩ b| for sorted id lists.
int64_t IntersectionSize(std::span<const VertexId> a,
                         std::span<const VertexId> b) {
  if (a.size() > b.size()) std::swap(a, b);
  int64_t count = 0;
  for (VertexId x : a) {
    if (std::binary_search(b.begin(), b.end(), x)) ++count;
  }
  return count;
}

}  // namespace

int64_t DisplayEstimate(double value) {
  return std::max<int64_t>(0, std::llround(value));
}

double InitialDegreeScale(double epsilon) { return 4.0 / epsilon; }

double CounterBudget(double epsilon) { return epsilon / 2.0; }

absl::StatusOr<ServerStep> ExactServerStep(double d,
                                           std::span<const VertexId> alive,
                                           std::span<const UserMessage> msgs) {
  if (alive.empty()) {
    return absl::InvalidArgumentError("server step with no alive vertices");
  }
  if (msgs.size() != alive.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("protocol violation: ", msgs.size(), " messages for ",
                     alive.size(), " alive vertices"));
  }
  double lowest = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < msgs.size(); ++i) {
    if (msgs[i].vertex != alive[i]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "protocol violation: missing message from vertex ", alive[i]));
    }
    lowest = std::min(lowest, msgs[i].value);
  }
  ServerStep step;
  step.d = std::max(d, lowest);
  for (const UserMessage& m : msgs) {
    if (m.value <= step.d) step.deleted.push_back(m.vertex);
  }
  return step;
}

absl::StatusOr<UserMessage> ExactUserStep(std::span<const VertexId> neighbors,
                                          std::span<const VertexId> s_prev,
                                          AdaptiveCounter& counter,
                                          double d1) {
  absl::StatusOr<CounterRelease> r =
      counter.Insert(IntersectionSize(neighbors, s_prev));
  if (!r.ok()) return r.status();
  return UserMessage{0, d1 - r->sum, r->node};
}

absl::StatusOr<std::unique_ptr<NoisyDegreeUser>> NoisyDegreeUser::Create(
    const RunConfig& cfg, size_t num_vertices, int64_t horizon) {
  CounterConfig counter_cfg;
  counter_cfg.horizon = std::max<int64_t>(horizon, 1);
  counter_cfg.epsilon = CounterBudget(cfg.epsilon);
  counter_cfg.kind = cfg.counter;
  counter_cfg.beta = cfg.beta;
  if (absl::Status st = ValidateCounterConfig(counter_cfg); !st.ok()) {
    return st;
  }
  std::unique_ptr<NoisyDegreeUser> user(
      new NoisyDegreeUser(cfg, counter_cfg));
  if (cfg.memory == MemoryMode::kMemoryful) {
    user->counters_.reserve(num_vertices);
    for (size_t v = 0; v < num_vertices; ++v) {
      absl::StatusOr<std::unique_ptr<AdaptiveCounter>> c =
          MakeCounter(counter_cfg, user->noise_, v);
      if (!c.ok()) return c.status();
      user->counters_.push_back(*std::move(c));
    }
    user->d1_.assign(num_vertices, 0.0);
  }
  return user;
}

NoisyDegreeUser::NoisyDegreeUser(const RunConfig& cfg,
                                 CounterConfig counter_cfg)
    : cfg_(cfg), counter_cfg_(counter_cfg), noise_(RunNoise(cfg)) {}

absl::StatusOr<UserMessage> NoisyDegreeUser::Report(
    VertexId v, std::span<const VertexId> neighbors, const Transcript& tr) {
  const int64_t t = tr.num_rounds() + 1;
  if (t == 1) {
    const double d1 =
        static_cast<double>(neighbors.size()) +
        SampleLaplace(noise_.WithScale(InitialDegreeScale(cfg_.epsilon)),
                      {v, NoiseRole::kInitialDegree, 0, 0});
    if (cfg_.memory == MemoryMode::kMemoryful) d1_[v] = d1;
    return UserMessage{v, d1, std::nullopt};
  }
  ++insertions_;
  if (cfg_.memory == MemoryMode::kMemoryless) {
    return ReportMemoryless(v, neighbors, tr);
  }
  absl::StatusOr<UserMessage> m = ExactUserStep(
      neighbors, tr.rounds().back().deleted, *counters_[v], d1_[v]);
  if (m.ok()) m->vertex = v;
  return m;
}

absl::StatusOr<UserMessage> NoisyDegreeUser::ReportMemoryless(
    VertexId v, std::span<const VertexId> neighbors, const Transcript& tr) {
  const int64_t t = tr.num_rounds() + 1;
  const bool tree = counter_cfg_.kind == CounterKind::kBinaryTree;
  absl::StatusOr<UserView> view =
      TranscriptReplayUserView(tr, neighbors, v, t, tree);
  if (!view.ok()) return view.status();
  if (!tree) {
    const int64_t sum =
        std::accumulate(view->inputs.begin(), view->inputs.end(),
                        *view->next_input);
    return UserMessage{v, *view->initial_message - static_cast<double>(sum),
                       std::nullopt};
  }
  absl::StatusOr<BinaryTreeState> state =
      BtStateFromHistory(view->inputs, view->node_outputs, counter_cfg_);
  if (!state.ok()) return state.status();
  BinaryTreeCounter counter(counter_cfg_, noise_, v, *std::move(state));
  absl::StatusOr<CounterRelease> r = counter.Insert(*view->next_input);
  if (!r.ok()) return r.status();
  return UserMessage{v, *view->initial_message - r->sum, r->node};
}

ExactServer::ExactServer(size_t num_vertices) {
  estimates_.values.assign(num_vertices,
                           std::numeric_limits<double>::quiet_NaN());
  estimates_.round_assigned.assign(num_vertices, 0);
  estimates_.phase.assign(num_vertices, 0);
}

absl::StatusOr<std::vector<VertexId>> ExactServer::Decide(
    int64_t t, std::span<const UserMessage> messages) {
  alive_scratch_.clear();
  for (const UserMessage& m : messages) alive_scratch_.push_back(m.vertex);
  absl::StatusOr<ServerStep> step =
      ExactServerStep(d_, alive_scratch_, messages);
  if (!step.ok()) return step.status();
  d_ = step->d;
  levels_.push_back(d_);
  for (VertexId v : step->deleted) {
    estimates_.values[v] = d_;
    estimates_.round_assigned[v] = t;
  }
  return std::move(step->deleted);
}

absl::StatusOr<ProtocolRun> RunExactCore(const Graph& g,
                                         const RunConfig& cfg,
    const RunOptions& options) {
  if (absl::Status st = ValidateRunConfig(cfg, ProtocolKind::kExact);
      !st.ok()) {
    return st;
  }
  const int64_t n = static_cast<int64_t>(g.num_vertices());
  if (cfg.memory == MemoryMode::kMemoryless && !options.keep_messages) {
    return absl::InvalidArgumentError(
        "memoryless users need a transcript that keeps messages");
  }
  absl::StatusOr<std::unique_ptr<NoisyDegreeUser>> user =
      NoisyDegreeUser::Create(cfg, g.id_bound(), n);
  if (!user.ok()) return user.status();
  ExactServer server(g.id_bound());
  const int64_t max_rounds =
      cfg.max_rounds > 0 ? cfg.max_rounds : std::max<int64_t>(n, 1);
  absl::StatusOr<Transcript> tr = RunProtocol(g, max_rounds, server, **user, options);
  if (!tr.ok()) return tr.status();
  return ProtocolRun{server.estimates(), *std::move(tr)};
}

}  // namespace ldpcore
