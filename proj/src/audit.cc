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

#include "ldpcore/audit.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "absl/strings/str_cat.h"
#include "ldpcore/core_approx.h"
#include "ldpcore/densest.h"
#include "ldpcore/generators.h"
#include "ldpcore/rng.h"

namespace ldpcore {
namespace {

using json = nlohmann::json;

// [initial degree, input after round 1, input after round 2, ...] for the
// rounds before `upto`, rebuilt from the transcript.
absl::StatusOr<std::vector<int64_t>> InsertedStream(
    const Transcript& tr, std::span<const VertexId> neighbors, VertexId v,
    int64_t upto) {
  absl::StatusOr<UserView> view =
      TranscriptReplayUserView(tr, neighbors, v, upto, false);
  if (!view.ok()) return view.status();
  std::vector<int64_t> stream = {static_cast<int64_t>(view->initial_degree)};
  stream.insert(stream.end(), view->inputs.begin(), view->inputs.end());
  if (view->next_input.has_value()) stream.push_back(*view->next_input);
  return stream;
}

}  // namespace

std::vector<int64_t> ExactTreeNodes(std::span<const int64_t> stream,
                                    int64_t horizon) {
  BinaryTreeState state = FreshTreeState(horizon);
  const TreeNoise exact{NoiseSource::Disabled()};
  std::vector<int64_t> nodes;
  nodes.reserve(stream.size());
  for (int64_t x : stream) {
    absl::StatusOr<TreeStep> step = BtInsert(state, x, exact);
    if (!step.ok()) break;
    nodes.push_back(static_cast<int64_t>(step->node_value));
  }
  return nodes;
}

absl::StatusOr<AuditReport> AuditCounterSensitivity(const CounterConfig& cfg,
                                                    int64_t stream_len,
                                                    int trials,
                                                    uint64_t seed) {
  if (absl::Status st = ValidateCounterConfig(cfg); !st.ok()) return st;
  if (stream_len < 1 || stream_len > cfg.horizon) {
    return absl::InvalidArgumentError(absl::StrCat(
        "stream length ", stream_len, " must lie in 1..", cfg.horizon));
  }
  if (trials < 0) {
    return absl::InvalidArgumentError("trials must be nonnegative");
  }
  const int node_bound = TreeLevels(cfg.horizon);
  int max_differing = 0;
  int64_t max_difference = 0;
  int violations = 0;
  for (int trial = 0; trial < trials; ++trial) {
    SeededRng rng(DeriveSeed(seed, {0x73656e73ULL, static_cast<uint64_t>(trial)}));
    std::vector<int64_t> a(stream_len);
    for (int64_t& x : a) x = static_cast<int64_t>(rng.Below(4));
    std::vector<int64_t> b = a;
    const size_t at = rng.Below(stream_len);
    b[at] += (b[at] == 0 || rng.Bernoulli(0.5)) ? 1 : -1;
    const std::vector<int64_t> na = ExactTreeNodes(a, cfg.horizon);
    const std::vector<int64_t> nb = ExactTreeNodes(b, cfg.horizon);
    int differing = 0;
    bool unit = true;
    for (size_t s = 0; s < na.size(); ++s) {
      const int64_t diff = std::llabs(na[s] - nb[s]);
      if (diff == 0) continue;
      ++differing;
      unit = unit && diff == 1;
      max_difference = std::max(max_difference, diff);
    }
    max_differing = std::max(max_differing, differing);
    if (differing > node_bound || !unit) ++violations;
  }
  AuditReport report;
  report.kind = "counter-sensitivity";
  report.pass = violations == 0 && max_difference <= 1;
  report.details = {{"trials", trials},
                    {"stream_len", stream_len},
                    {"horizon", cfg.horizon},
                    {"node_bound", node_bound},
                    {"max_differing_nodes", max_differing},
                    {"max_node_difference", max_difference},
                    {"violations", violations}};
  return report;
}

absl::StatusOr<AuditReport> AuditProtocolStreamDiscrepancy(
    const Graph& g, VertexId u, VertexId v, const RunConfig& cfg,
    ProtocolKind protocol) {
  absl::StatusOr<std::pair<Graph, Graph>> pair = NeighboringPair(g, u, v);
  if (!pair.ok()) return pair.status();
  const Graph* graphs[2] = {&pair->first, &pair->second};
  Transcript tr[2];
  for (int i = 0; i < 2; ++i) {
    absl::StatusOr<ProtocolRun> run = protocol == ProtocolKind::kExact
                                          ? RunExactCore(*graphs[i], cfg)
                                          : RunApproxCore(*graphs[i], cfg);
    if (!run.ok()) return run.status();
    tr[i] = std::move(run->transcript);
  }
  const int64_t common = std::min(tr[0].num_rounds(), tr[1].num_rounds());
  int64_t diverge = common + 1;
  for (int64_t r = 1; r <= common; ++r) {
    if (tr[0].rounds()[r - 1].deleted != tr[1].rounds()[r - 1].deleted) {
      diverge = r;
      break;
    }
  }

  int64_t nonendpoint_discrepancy = 0;
  int64_t element_discrepancy = 0;
  bool endpoints_ok = true;
  json endpoints = json::array();
  for (VertexId w = 0; w < g.id_bound(); ++w) {
    if (!g.contains(w)) continue;
    // Deletions before the divergence round agree in both runs.
    const int64_t dr = tr[0].deletion_round(w);
    const int64_t upto = (dr == 0 || dr >= diverge) ? diverge : dr;
    std::vector<int64_t> streams[2];
    for (int i = 0; i < 2; ++i) {
      absl::StatusOr<std::vector<int64_t>> s =
          InsertedStream(tr[i], graphs[i]->neighbors(w), w, upto);
      if (!s.ok()) return s.status();
      streams[i] = *std::move(s);
    }
    const bool endpoint = w == u || w == v;
    json diffs = json::array();
    int64_t initial_diff = streams[1][0] - streams[0][0];
    for (size_t r = 1; r < streams[0].size(); ++r) {
      const int64_t diff = streams[1][r] - streams[0][r];
      if (diff == 0) continue;
      element_discrepancy += std::llabs(diff);
      diffs.push_back({{"after_round", r}, {"diff", diff}});
    }
    if (!endpoint) {
      nonendpoint_discrepancy += std::llabs(initial_diff);
      for (const json& d : diffs) {
        nonendpoint_discrepancy += std::llabs(d["diff"].get<int64_t>());
      }
      continue;
    }
    const VertexId other = w == u ? v : u;
    bool ok = std::llabs(initial_diff) == 1 && diffs.size() <= 1;
    for (const json& d : diffs) {
      const int64_t r = d["after_round"].get<int64_t>();
      ok = ok && std::llabs(d["diff"].get<int64_t>()) == 1 &&
           tr[0].deletion_round(other) == r;
    }
    endpoints_ok = endpoints_ok && ok;
    endpoints.push_back({{"vertex", w},
                         {"initial_degree_diff", initial_diff},
                         {"element_diffs", diffs},
                         {"conforms", ok}});
  }

  AuditReport report;
  report.kind = "stream-discrepancy";
  report.pass = nonendpoint_discrepancy == 0 && endpoints_ok &&
                element_discrepancy <= 1;
  report.details = {{"edge", {u, v}},
                    {"rounds", {tr[0].num_rounds(), tr[1].num_rounds()}},
                    {"divergence_round", diverge},
                    {"nonendpoint_discrepancy", nonendpoint_discrepancy},
                    {"endpoint_element_discrepancy", element_discrepancy},
                    {"endpoints", endpoints}};
  return report;
}

AlphaTracker::AlphaTracker(const Graph& g) : g_(&g), degree_(g.id_bound()) {
  for (VertexId v : g.Vertices()) {
    degree_[v] = static_cast<int64_t>(g.neighbors(v).size());
  }
}

absl::Status AlphaTracker::Observe(const Round& round) {
  for (const UserMessage& m : round.messages) {
    if (!g_->contains(m.vertex)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "round ", round.t, ": message from vertex ", m.vertex,
          " which is not in the graph"));
    }
    alpha_ = std::max(
        alpha_, std::fabs(m.value - static_cast<double>(degree_[m.vertex])));
  }
  for (VertexId v : round.deleted) {
    if (!g_->contains(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("round ", round.t, ": deleted vertex ", v,
                       " is not in the graph"));
    }
    for (VertexId x : g_->neighbors(v)) --degree_[x];
  }
  return absl::OkStatus();
}

absl::StatusOr<double> MeasureAlphaObs(const Transcript& tr, const Graph& g) {
  if (tr.num_vertices() != g.id_bound()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "transcript over ", tr.num_vertices(), " vertices, graph over ",
        g.id_bound()));
  }
  if (!tr.keeps_messages()) {
    return absl::FailedPreconditionError(
        "the transcript does not keep messages");
  }
  AlphaTracker tracker(g);
  for (const Round& round : tr.rounds()) {
    if (absl::Status st = tracker.Observe(round); !st.ok()) return st;
  }
  return tracker.alpha();
}

double SandwichExcess(const CorenessVector& k, const EstimateVector& est,
                      double gamma, double alpha, double additive) {
  double excess = -std::numeric_limits<double>::infinity();
  const size_t n = std::min(k.size(), est.values.size());
  for (size_t v = 0; v < n; ++v) {
    const double kv = k[v];
    const double e = est.values[v];
    excess = std::max(excess, (kv - alpha - additive) - e);
    excess = std::max(excess, e - (gamma * kv + alpha + additive));
  }
  return excess;
}

double CoreWitnessShortfall(const Graph& g, const EstimateVector& est,
                            double gamma, double alpha, double additive) {
  std::vector<VertexId> order = g.Vertices();
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return est.values[a] > est.values[b];
  });
  std::vector<uint8_t> in_u(g.id_bound(), 0);
  std::vector<int64_t> degree(g.id_bound(), 0);
  std::vector<VertexId> members;
  double shortfall = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < order.size();) {
    const double level = est.values[order[i]];
    size_t j = i;
    for (; j < order.size() && est.values[order[j]] == level; ++j) {
      const VertexId w = order[j];
      in_u[w] = 1;
      members.push_back(w);
      for (VertexId x : g.neighbors(w)) {
        if (in_u[x] && x != w) {
          ++degree[x];
          ++degree[w];
        }
      }
    }
    int64_t min_degree = std::numeric_limits<int64_t>::max();
    for (VertexId w : members) min_degree = std::min(min_degree, degree[w]);
    shortfall = std::max(shortfall, (level / gamma - alpha - additive) -
                                        static_cast<double>(min_degree));
    i = j;
  }
  return shortfall;
}

absl::StatusOr<DensityGuarantee> CheckDensityGuarantee(
    const Graph& g, const EstimateVector& est, double gamma, double alpha) {
  absl::StatusOr<DensestResult> result = DensestFromEstimates(g, est);
  if (!result.ok()) return result.status();
  const CorenessVector k = ExactCoreness(g);
  DensityGuarantee out;
  out.hypotheses_hold = SandwichExcess(k, est, gamma, alpha) <= 0 &&
                        CoreWitnessShortfall(g, est, gamma, alpha) <= 0;
  out.bound = result->k_tilde_star / (2 * gamma) -
              (1 + 1 / gamma) * alpha / 2;
  out.density = boost::rational_cast<double>(result->density);
  out.holds = out.density >= out.bound;
  return out;
}

}  // namespace ldpcore
