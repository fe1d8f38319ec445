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

// Round-based simulation of local-model protocols on a graph. Every vertex
// is a user that privately knows its neighbor list; each round the users
// that are still active send one message, the server answers with the set
// of users it deletes, and the round is appended to the transcript.

#ifndef LDPCORE_LOCAL_SIM_H_
#define LDPCORE_LOCAL_SIM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldpcore/counting.h"
#include "ldpcore/graph.h"
#include "ldpcore/noise.h"

namespace ldpcore {

enum class MemoryMode { kMemoryful, kMemoryless };

std::string MemoryModeName(MemoryMode mode);
absl::StatusOr<MemoryMode> ParseMemoryMode(const std::string& name);

enum class ProtocolKind { kExact, kApprox };

std::string ProtocolKindName(ProtocolKind kind);
absl::StatusOr<ProtocolKind> ParseProtocolKind(const std::string& name);

struct RunConfig {
  double epsilon = 1.0;
  MemoryMode memory = MemoryMode::kMemoryful;
  CounterKind counter = CounterKind::kBinaryTree;
  NoiseMode noise = NoiseMode::kLaplace;
  double eta = 1.0;        // approximate protocol only
  uint64_t seed = 0;
  int64_t max_rounds = 0;  // 0 selects the protocol's own round bound
  int64_t phase_rounds = 0;  // approximate protocol: 0 selects the default
  double beta = 0.01;
  // Refuse configurations that are not differentially private.
  bool assert_private = false;
};

absl::Status ValidateRunConfig(const RunConfig& cfg, ProtocolKind protocol);

// The master noise source of a run (scale unset).
NoiseSource RunNoise(const RunConfig& cfg);

// One user's message in one round. `value` is the user's noisy degree.
// `node` is the tree node the user's binary-tree counter materialized this
// round; it is what a memoryless user needs to rebuild its counter later.
struct UserMessage {
  VertexId vertex = 0;
  double value = 0.0;
  std::optional<double> node;

  friend bool operator==(const UserMessage&, const UserMessage&) = default;
};

struct Round {
  int64_t t = 0;
  std::vector<UserMessage> messages;  // sorted by vertex, active users only
  std::vector<VertexId> deleted;      // S_t, sorted

  friend bool operator==(const Round&, const Round&) = default;
};

// Append-only record of a run. A vertex sends in round t iff it was not
// deleted in rounds 1..t-1; vertices that send nothing are absent.
class Transcript {
 public:
  Transcript() = default;
  // Without `keep_messages` only the deleted sets are stored.
  explicit Transcript(size_t num_vertices, bool keep_messages = true)
      : deletion_round_(num_vertices, 0),
        num_active_(num_vertices),
        keep_messages_(keep_messages) {}

  size_t num_vertices() const { return deletion_round_.size(); }
  const std::vector<Round>& rounds() const { return rounds_; }
  int64_t num_rounds() const { return static_cast<int64_t>(rounds_.size()); }
  size_t num_active() const { return num_active_; }
  bool keeps_messages() const { return keep_messages_; }

  // Round in which v was deleted, 0 while v is active.
  int64_t deletion_round(VertexId v) const { return deletion_round_[v]; }
  bool active_at(VertexId v, int64_t t) const {
    return deletion_round_[v] == 0 || deletion_round_[v] >= t;
  }

  // Validates round numbering, sender set and S_t before appending.
  absl::Status Append(Round round);

  // v's message in round t, if it sent one.
  const UserMessage* FindMessage(VertexId v, int64_t t) const;

  // One JSON object per round:
  // {"t":1,"msgs":{"0":2.5,...},"S":[0,3]} plus "nodes":{...} when counters
  // released tree nodes. Doubles are printed with round-trip precision.
  std::string ToJsonLines() const;
  static absl::StatusOr<Transcript> FromJsonLines(std::string_view text,
                                                  size_t num_vertices);

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<Round> rounds_;
  std::vector<int64_t> deletion_round_;
  size_t num_active_ = 0;
  bool keep_messages_ = true;
};

// What user v can reconstruct from the broadcast transcript before acting
// in round `upto`, besides its own neighbor list.
struct UserView {
  size_t initial_degree = 0;            // |N_v|
  std::optional<double> initial_message;  // its round-1 message, if upto > 1
  std::vector<int64_t> inputs;          // counter inputs |N_v ∩ S_r|, r < upto-1
  std::vector<double> node_outputs;     // node released with each input
  std::optional<int64_t> next_input;    // |N_v ∩ S_{upto-1}|, if upto > 1
};

// Fails with InvalidArgument if v was deleted before round `upto` or `upto`
// is past the next round, FailedPrecondition if the transcript dropped its
// messages, and DataLoss if it lacks node values the view needs
// (binary-tree counters only).
absl::StatusOr<UserView> TranscriptReplayUserView(
    const Transcript& tr, std::span<const VertexId> neighbors, VertexId v,
    int64_t upto, bool require_nodes);

// Server-side reconstruction of v's noisy degree in round t from the stored
// node values: the round-1 message minus the tree release over the set bits
// of t-1. Requires a binary-tree run.
absl::StatusOr<double> ServerNoisyDegree(const Transcript& tr, VertexId v,
                                         int64_t t);

class UserLogic {
 public:
  virtual ~UserLogic() = default;
  // v's message for round tr.num_rounds() + 1.
  virtual absl::StatusOr<UserMessage> Report(
      VertexId v, std::span<const VertexId> neighbors,
      const Transcript& tr) = 0;
};

class ServerLogic {
 public:
  virtual ~ServerLogic() = default;
  // Chooses S_t from the round-t messages, which cover exactly the active
  // vertices.
  virtual absl::StatusOr<std::vector<VertexId>> Decide(
      int64_t t, std::span<const UserMessage> messages) = 0;
  // Whether the server ends the interaction after round t even though some
  // vertices remain.
  virtual bool Finished(int64_t /*t*/) const { return false; }
};

struct RunOptions {
  // Store every message in the transcript. Long runs on large graphs can
  // turn this off; memoryless users cannot.
  bool keep_messages = true;
  // Called with each complete round, before it enters the transcript.
  std::function<void(const Round&)> observer;
};

// Alternates message collection and server decisions until every vertex is
// deleted or the server finishes. Aborted ("protocol divergence") if
// `max_rounds` rounds pass without either.
absl::StatusOr<Transcript> RunProtocol(const Graph& g, int64_t max_rounds,
                                       ServerLogic& server, UserLogic& user,
                                       const RunOptions& options = {});

}  // namespace ldpcore

#endif  // LDPCORE_LOCAL_SIM_H_
