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

#include "ldpcore/local_sim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "ldpcore/rng.h"
#include "nlohmann/json.hpp"

namespace ldpcore {
namespace {

using json = nlohmann::json;

absl::Status CheckSorted(std::span<const VertexId> ids, const char* what) {
  for (size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] >= ids[i]) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " must be strictly increasing"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

std::string MemoryModeName(MemoryMode mode) {
  return mode == MemoryMode::kMemoryful ? "memoryful" : "memoryless";
}

absl::StatusOr<MemoryMode> ParseMemoryMode(const std::string& name) {
  if (name == "memoryful") return MemoryMode::kMemoryful;
  if (name == "memoryless") return MemoryMode::kMemoryless;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown memory mode \"", name, "\" (memoryless|memoryful)"));
}

std::string ProtocolKindName(ProtocolKind kind) {
  return kind == ProtocolKind::kExact ? "exact" : "approx";
}

absl::StatusOr<ProtocolKind> ParseProtocolKind(const std::string& name) {
  if (name == "exact") return ProtocolKind::kExact;
  if (name == "approx") return ProtocolKind::kApprox;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown protocol \"", name, "\" (exact|approx)"));
}

absl::Status ValidateRunConfig(const RunConfig& cfg, ProtocolKind protocol) {
  if (!(cfg.epsilon > 0) || !std::isfinite(cfg.epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be positive, got ", cfg.epsilon));
  }
  if (protocol == ProtocolKind::kApprox &&
      (!(cfg.eta > 0) || !std::isfinite(cfg.eta))) {
    return absl::InvalidArgumentError(
        absl::StrCat("eta must be positive, got ", cfg.eta));
  }
  if (!(cfg.beta > 0 && cfg.beta < 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in (0, 1), got ", cfg.beta));
  }
  if (cfg.max_rounds < 0 || cfg.phase_rounds < 0) {
    return absl::InvalidArgumentError("round limits must be nonnegative");
  }
  if (cfg.memory == MemoryMode::kMemoryless &&
      cfg.counter == CounterKind::kSparseVector) {
    return absl::InvalidArgumentError(
        "the sparse-vector counter keeps a secret threshold between rounds "
        "and cannot run memoryless");
  }
  if (cfg.assert_private) {
    if (cfg.noise == NoiseMode::kDisabled) {
      return absl::InvalidArgumentError(
          "--noise disabled is not private (--assert-private is set)");
    }
    if (cfg.counter == CounterKind::kExactDebug) {
      return absl::InvalidArgumentError(
          "the exact-debug counter is not private (--assert-private is set)");
    }
  }
  return absl::OkStatus();
}

NoiseSource RunNoise(const RunConfig& cfg) {
  return NoiseSource(cfg.noise, 0.0, DeriveSeed(cfg.seed, {0x72756eULL}));
}

absl::Status Transcript::Append(Round round) {
  const int64_t expected = num_rounds() + 1;
  if (round.t != expected) {
    return absl::InvalidArgumentError(
        absl::StrCat("round ", round.t, " appended, expected ", expected));
  }
  for (size_t i = 0; i < round.messages.size(); ++i) {
    const VertexId v = round.messages[i].vertex;
    if (v >= num_vertices()) {
      return absl::InvalidArgumentError(
          absl::StrCat("round ", round.t, ": message from unknown vertex ", v));
    }
    if (i > 0 && round.messages[i - 1].vertex >= v) {
      return absl::InvalidArgumentError(absl::StrCat(
          "round ", round.t, ": messages must be sorted by vertex"));
    }
    if (!active_at(v, round.t)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "round ", round.t, ": vertex ", v, " was deleted in round ",
          deletion_round_[v], " but sent a message"));
    }
  }
  if (num_active_ != round.messages.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "round ", round.t, ": ", round.messages.size(), " messages from ",
        num_active_, " active vertices"));
  }
  if (absl::Status st = CheckSorted(round.deleted, "S_t"); !st.ok()) {
    return st;
  }
  for (VertexId v : round.deleted) {
    if (v >= num_vertices() || deletion_round_[v] != 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "round ", round.t, ": vertex ", v, " deleted while not active"));
    }
  }
  for (VertexId v : round.deleted) deletion_round_[v] = round.t;
  num_active_ -= round.deleted.size();
  if (!keep_messages_) {
    round.messages.clear();
    round.messages.shrink_to_fit();
  }
  rounds_.push_back(std::move(round));
  return absl::OkStatus();
}

const UserMessage* Transcript::FindMessage(VertexId v, int64_t t) const {
  if (t < 1 || t > num_rounds()) return nullptr;
  const std::vector<UserMessage>& msgs = rounds_[t - 1].messages;
  auto it = std::lower_bound(
      msgs.begin(), msgs.end(), v,
      [](const UserMessage& m, VertexId id) { return m.vertex < id; });
  if (it == msgs.end() || it->vertex != v) return nullptr;
  return &*it;
}

std::string Transcript::ToJsonLines() const {
  std::string out;
  for (const Round& r : rounds_) {
    json line;
    line["t"] = r.t;
    json msgs = json::object();
    json nodes = json::object();
    for (const UserMessage& m : r.messages) {
      msgs[std::to_string(m.vertex)] = m.value;
      if (m.node.has_value()) nodes[std::to_string(m.vertex)] = *m.node;
    }
    line["msgs"] = std::move(msgs);
    line["S"] = r.deleted;
    if (!nodes.empty()) line["nodes"] = std::move(nodes);
    out += line.dump();
    out += '\n';
  }
  return out;
}

absl::StatusOr<Transcript> Transcript::FromJsonLines(std::string_view text,
                                                     size_t num_vertices) {
  Transcript tr(num_vertices);
  int line_no = 0;
  const absl::string_view input(text.data(), text.size());
  for (absl::string_view line : absl::StrSplit(input, '\n')) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == absl::string_view::npos) continue;
    const json obj = json::parse(line.begin(), line.end(), nullptr,
                                 /*allow_exceptions=*/false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("t") ||
        !obj.contains("msgs") || !obj.contains("S")) {
      return absl::DataLossError(
          absl::StrCat("transcript line ", line_no, ": malformed round"));
    }
    try {
      Round r;
      r.t = obj.at("t").get<int64_t>();
      std::map<VertexId, UserMessage> by_vertex;
      for (const auto& [key, value] : obj.at("msgs").items()) {
        const VertexId v = static_cast<VertexId>(std::stoul(key));
        by_vertex[v] = UserMessage{v, value.get<double>(), std::nullopt};
      }
      if (obj.contains("nodes")) {
        for (const auto& [key, value] : obj.at("nodes").items()) {
          const VertexId v = static_cast<VertexId>(std::stoul(key));
          auto it = by_vertex.find(v);
          if (it == by_vertex.end()) {
            return absl::DataLossError(absl::StrCat(
                "transcript line ", line_no, ": node value for vertex ", v,
                " without a message"));
          }
          it->second.node = value.get<double>();
        }
      }
      for (auto& [v, m] : by_vertex) r.messages.push_back(m);
      r.deleted = obj.at("S").get<std::vector<VertexId>>();
      if (absl::Status st = tr.Append(std::move(r)); !st.ok()) {
        return absl::DataLossError(
            absl::StrCat("transcript line ", line_no, ": ", st.message()));
      }
    } catch (const std::exception& e) {
      return absl::DataLossError(
          absl::StrCat("transcript line ", line_no, ": ", e.what()));
    }
  }
  return tr;
}

absl::StatusOr<UserView> TranscriptReplayUserView(
    const Transcript& tr, std::span<const VertexId> neighbors, VertexId v,
    int64_t upto, bool require_nodes) {
  if (v >= tr.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat("unknown vertex ", v));
  }
  if (upto < 1 || upto > tr.num_rounds() + 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("round ", upto, " is outside 1..", tr.num_rounds() + 1));
  }
  if (!tr.active_at(v, upto)) {
    return absl::InvalidArgumentError(
        absl::StrCat("vertex ", v, " was deleted in round ",
                     tr.deletion_round(v), " and has no view of round ", upto));
  }
  UserView view;
  view.initial_degree = neighbors.size();
  if (upto == 1) return view;
  if (!tr.keeps_messages()) {
    return absl::FailedPreconditionError(
        "the transcript does not keep messages; no user view can be rebuilt");
  }

  // counts[r] = |N_v ∩ S_r| for r < upto.
  std::vector<int64_t> counts(upto, 0);
  for (VertexId u : neighbors) {
    const int64_t r = tr.deletion_round(u);
    if (r >= 1 && r < upto) ++counts[r];
  }
  view.initial_message = tr.FindMessage(v, 1)->value;
  view.inputs.assign(counts.begin() + 1, counts.end() - 1);
  view.next_input = counts[upto - 1];
  for (int64_t r = 2; r < upto; ++r) {
    const UserMessage* m = tr.FindMessage(v, r);
    if (!m->node.has_value()) {
      if (require_nodes) {
        return absl::DataLossError(absl::StrCat(
            "transcript lacks the node value of vertex ", v, " in round ", r));
      }
      view.node_outputs.push_back(0.0);
    } else {
      view.node_outputs.push_back(*m->node);
    }
  }
  return view;
}

absl::StatusOr<double> ServerNoisyDegree(const Transcript& tr, VertexId v,
                                         int64_t t) {
  if (v >= tr.num_vertices() || t < 1 || t > tr.num_rounds() ||
      !tr.active_at(v, t)) {
    return absl::InvalidArgumentError(
        absl::StrCat("vertex ", v, " sent no message in round ", t));
  }
  if (!tr.keeps_messages()) {
    return absl::FailedPreconditionError(
        "the transcript does not keep messages");
  }
  const double d1 = tr.FindMessage(v, 1)->value;
  // After t-1 insertions the counter holds, for each set bit j of t-1, the
  // node materialized at the step s whose lowest set bit is j; step s is
  // sent in round s+1.
  const uint64_t steps = static_cast<uint64_t>(t - 1);
  double released = 0.0;
  for (uint64_t bits = steps; bits != 0; bits &= bits - 1) {
    const uint64_t s = steps & ~((uint64_t{1} << std::countr_zero(bits)) - 1);
    const UserMessage* m = tr.FindMessage(v, static_cast<int64_t>(s) + 1);
    if (!m->node.has_value()) {
      return absl::DataLossError(absl::StrCat(
          "transcript lacks the node value of vertex ", v, " in round ",
          s + 1));
    }
    released += *m->node;
  }
  return d1 - released;
}

absl::StatusOr<Transcript> RunProtocol(const Graph& g, int64_t max_rounds,
                                       ServerLogic& server, UserLogic& user,
                                       const RunOptions& options) {
  if (max_rounds < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("max_rounds must be >= 1, got ", max_rounds));
  }
  if (!g.is_full()) {
    return absl::InvalidArgumentError(
        "protocols run on full graphs; compact the induced subgraph first");
  }
  Transcript tr(g.id_bound(), options.keep_messages);
  std::vector<VertexId> active = g.Vertices();
  for (int64_t t = 1; !active.empty(); ++t) {
    if (t > max_rounds) {
      return absl::AbortedError(absl::StrCat(
          "protocol divergence: ", active.size(),
          " vertices still active after ", max_rounds, " rounds"));
    }
    Round round;
    round.t = t;
    round.messages.reserve(active.size());
    for (VertexId v : active) {
      absl::StatusOr<UserMessage> m = user.Report(v, g.neighbors(v), tr);
      if (!m.ok()) return m.status();
      m->vertex = v;
      round.messages.push_back(*std::move(m));
    }
    absl::StatusOr<std::vector<VertexId>> deleted =
        server.Decide(t, round.messages);
    if (!deleted.ok()) return deleted.status();
    round.deleted = *std::move(deleted);
    std::sort(round.deleted.begin(), round.deleted.end());
    if (options.observer) options.observer(round);
    if (absl::Status st = tr.Append(std::move(round)); !st.ok()) return st;
    std::erase_if(active,
                  [&tr](VertexId v) { return tr.deletion_round(v) != 0; });
    if (!active.empty() && server.Finished(t)) break;
  }
  return tr;
}

}  // namespace ldpcore
