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

// Command-line front end.
//
// Exit codes: 0 success, 1 an audit ran and failed, 2 invalid input or
// flags, 3 protocol divergence or counter overflow, 4 I/O failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "ldpcore/audit.h"
#include "ldpcore/core_approx.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/densest.h"
#include "ldpcore/format.h"
#include "ldpcore/generators.h"
#include "ldpcore/graph.h"
#include "ldpcore/local_sim.h"
#include "ldpcore/oracles.h"
#include "ldpcore/sweep.h"

namespace ldpcore {
namespace {

constexpr int kAuditFailed = 1;

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 0;
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kAborted:
    case absl::StatusCode::kResourceExhausted:
      return 3;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kUnavailable:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kPermissionDenied:
      return 4;
    default:
      return 2;
  }
}

// "-" is stdout.
absl::Status WriteOutput(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return absl::OkStatus();
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  out << text;
  out.close();
  if (!out) return absl::UnavailableError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

struct RunFlags {
  std::string graph;
  double epsilon = 1.0;
  double eta = 1.0;
  std::string counter = "binary-tree";
  std::string memory = "memoryful";
  std::string noise = "laplace";
  uint64_t seed = 0;
  int64_t max_rounds = 0;
  int64_t phase_rounds = 0;
  bool assert_private = false;
  std::string transcript;
};

void AddRunFlags(CLI::App* app, RunFlags& f, bool approx_flags) {
  app->add_option("--graph", f.graph, "Edge-list file")->required();
  app->add_option("--epsilon", f.epsilon, "Total privacy budget")
      ->capture_default_str();
  app->add_option("--counter", f.counter,
                  "binary-tree | sparse-vector | exact-debug")
      ->capture_default_str();
  app->add_option("--memory", f.memory, "memoryful | memoryless")
      ->capture_default_str();
  app->add_option("--noise", f.noise, "laplace | disabled")
      ->capture_default_str();
  app->add_option("--seed", f.seed, "Noise seed")->capture_default_str();
  app->add_option("--max-rounds", f.max_rounds,
                  "Round limit (0: the protocol's own bound)");
  app->add_flag("--assert-private", f.assert_private,
                "Refuse settings that are not differentially private");
  app->add_option("--transcript", f.transcript,
                  "Write the run's transcript as JSON lines");
  if (approx_flags) {
    app->add_option("--eta", f.eta, "Approximation parameter")
        ->capture_default_str();
    app->add_option("--phase-rounds", f.phase_rounds,
                    "Rounds per phase (0: ceil(log_{1+eta} n))");
  }
}

absl::StatusOr<RunConfig> ToRunConfig(const RunFlags& f) {
  RunConfig cfg;
  cfg.epsilon = f.epsilon;
  cfg.eta = f.eta;
  cfg.seed = f.seed;
  cfg.max_rounds = f.max_rounds;
  cfg.phase_rounds = f.phase_rounds;
  cfg.assert_private = f.assert_private;
  absl::StatusOr<CounterKind> counter = ParseCounterKind(f.counter);
  if (!counter.ok()) return counter.status();
  cfg.counter = *counter;
  absl::StatusOr<MemoryMode> memory = ParseMemoryMode(f.memory);
  if (!memory.ok()) return memory.status();
  cfg.memory = *memory;
  absl::StatusOr<NoiseMode> noise = ParseNoiseMode(f.noise);
  if (!noise.ok()) return noise.status();
  cfg.noise = *noise;
  return cfg;
}

absl::Status MaybeWriteTranscript(const RunFlags& f, const Transcript& tr) {
  if (f.transcript.empty()) return absl::OkStatus();
  return WriteOutput(f.transcript, tr.ToJsonLines());
}

// --- generate ---------------------------------------------------------------

struct GenerateFlags {
  std::string family = "gnp";
  size_t n = 0;
  double p = -1.0;
  double degree = 8.0;
  uint64_t seed = 0;
  std::string secret;
  std::string query;
  std::string out = "-";
};

absl::Status CmdGenerate(const GenerateFlags& f) {
  absl::StatusOr<Graph> g;
  if (f.family == "query" || f.family == "query-graph") {
    absl::StatusOr<QueryGraphSpec> spec = ParseQueryGraphSpec(f.secret, f.query);
    if (!spec.ok()) return spec.status();
    g = GenQueryGraph(*spec);
  } else if (f.family == "gnp" && f.p >= 0) {
    g = GenGnp(f.n, f.p, f.seed);
  } else {
    absl::StatusOr<GraphFamily> family = ParseGraphFamily(f.family);
    if (!family.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unknown family \"", f.family, "\" (gnp|regular|path|query-graph)"));
    }
    g = GenerateFamily(*family, f.n, f.degree, f.seed);
  }
  if (!g.ok()) return g.status();
  return WriteOutput(f.out, FormatEdgeList(*g));
}

// --- oracle -----------------------------------------------------------------

absl::Status CmdOracle(const std::string& graph_path) {
  absl::StatusOr<Graph> g = ReadEdgeListFile(graph_path);
  if (!g.ok()) return g.status();
  const CorenessVector k = ExactCoreness(*g);
  std::string out = absl::StrCat("k=", absl::StrJoin(k, ","),
                                 "; k*=", MaxCoreness(k));
  if (g->num_vertices() > 0 && g->num_vertices() <= kMaxBruteForceVertices) {
    absl::StatusOr<DensestSubgraph> best = BruteForceDensest(*g);
    if (!best.ok()) return best.status();
    absl::StrAppend(&out, "; rho*=",
                    FormatDouble(boost::rational_cast<double>(best->density)),
                    "; witness=", absl::StrJoin(best->subset, ","));
  }
  std::cout << out << "\n";
  return absl::OkStatus();
}

// --- run-exact / run-approx -------------------------------------------------

absl::Status CmdRun(const RunFlags& f, ProtocolKind protocol,
                    const std::string& out) {
  absl::StatusOr<RunConfig> cfg = ToRunConfig(f);
  if (!cfg.ok()) return cfg.status();
  absl::StatusOr<Graph> g = ReadEdgeListFile(f.graph);
  if (!g.ok()) return g.status();
  absl::StatusOr<ProtocolRun> run = protocol == ProtocolKind::kExact
                                        ? RunExactCore(*g, *cfg)
                                        : RunApproxCore(*g, *cfg);
  if (!run.ok()) return run.status();
  if (absl::Status st = MaybeWriteTranscript(f, run->transcript); !st.ok()) {
    return st;
  }
  const CorenessVector k = ExactCoreness(*g);
  const bool approx = protocol == ProtocolKind::kApprox;
  std::string csv = approx ? "vertex,k_true,k_est,round,phase\n"
                           : "vertex,k_true,k_est,round\n";
  for (VertexId v : g->Vertices()) {
    absl::StrAppend(&csv, v, ",", k[v], ",",
                    FormatDouble(run->estimates.values[v]), ",",
                    run->estimates.round_assigned[v]);
    if (approx) absl::StrAppend(&csv, ",", run->estimates.phase[v]);
    csv += "\n";
  }
  return WriteOutput(out, csv);
}

// --- run-densest ------------------------------------------------------------

absl::Status CmdDensest(const RunFlags& f, const std::string& mode,
                        const std::string& out) {
  absl::StatusOr<ProtocolKind> protocol = ParseProtocolKind(mode);
  if (!protocol.ok()) return protocol.status();
  absl::StatusOr<RunConfig> cfg = ToRunConfig(f);
  if (!cfg.ok()) return cfg.status();
  absl::StatusOr<Graph> g = ReadEdgeListFile(f.graph);
  if (!g.ok()) return g.status();
  absl::StatusOr<DensestRun> run = RunDensest(*g, *cfg, *protocol);
  if (!run.ok()) return run.status();
  if (absl::Status st = MaybeWriteTranscript(f, run->run.transcript);
      !st.ok()) {
    return st;
  }
  nlohmann::json report = {
      {"subset", run->result.subset},
      {"density", boost::rational_cast<double>(run->result.density)},
      {"density_exact", FormatRational(run->result.density)},
      {"k_tilde_star", run->result.k_tilde_star}};
  if (g->num_vertices() <= kMaxBruteForceVertices) {
    absl::StatusOr<DensestSubgraph> best = BruteForceDensest(*g);
    if (!best.ok()) return best.status();
    report["rho_star"] = boost::rational_cast<double>(best->density);
    report["rho_star_exact"] = FormatRational(best->density);
  }
  return WriteOutput(out, report.dump(2) + "\n");
}

// --- audit ------------------------------------------------------------------

struct AuditFlags {
  int64_t horizon = 1024;
  int64_t stream_len = 0;
  int trials = 1000;
  double counter_epsilon = 1.0;
  std::string protocol = "exact";
  VertexId u = 0;
  VertexId v = 1;
  std::string out = "-";
};

absl::StatusOr<bool> EmitReport(const AuditReport& report,
                                const std::string& out) {
  nlohmann::json j = {
      {"kind", report.kind}, {"pass", report.pass}, {"details", report.details}};
  if (absl::Status st = WriteOutput(out, j.dump(2) + "\n"); !st.ok()) return st;
  return report.pass;
}

absl::StatusOr<bool> CmdAuditCounter(const AuditFlags& a, uint64_t seed) {
  CounterConfig cfg;
  cfg.horizon = a.horizon;
  cfg.epsilon = a.counter_epsilon;
  absl::StatusOr<AuditReport> report = AuditCounterSensitivity(
      cfg, a.stream_len > 0 ? a.stream_len : a.horizon, a.trials, seed);
  if (!report.ok()) return report.status();
  return EmitReport(*report, a.out);
}

absl::StatusOr<bool> CmdAuditStream(const RunFlags& f, const AuditFlags& a) {
  absl::StatusOr<ProtocolKind> protocol = ParseProtocolKind(a.protocol);
  if (!protocol.ok()) return protocol.status();
  absl::StatusOr<RunConfig> cfg = ToRunConfig(f);
  if (!cfg.ok()) return cfg.status();
  absl::StatusOr<Graph> g = ReadEdgeListFile(f.graph);
  if (!g.ok()) return g.status();
  absl::StatusOr<AuditReport> report =
      AuditProtocolStreamDiscrepancy(*g, a.u, a.v, *cfg, *protocol);
  if (!report.ok()) return report.status();
  return EmitReport(*report, a.out);
}

// Runs the protocol, measures alpha_obs from the transcript and checks the
// estimates against it.
absl::StatusOr<bool> CmdAuditAlpha(const RunFlags& f, const AuditFlags& a) {
  absl::StatusOr<ProtocolKind> protocol = ParseProtocolKind(a.protocol);
  if (!protocol.ok()) return protocol.status();
  absl::StatusOr<RunConfig> cfg = ToRunConfig(f);
  if (!cfg.ok()) return cfg.status();
  absl::StatusOr<Graph> g = ReadEdgeListFile(f.graph);
  if (!g.ok()) return g.status();
  absl::StatusOr<ProtocolRun> run = *protocol == ProtocolKind::kExact
                                        ? RunExactCore(*g, *cfg)
                                        : RunApproxCore(*g, *cfg);
  if (!run.ok()) return run.status();
  if (absl::Status st = MaybeWriteTranscript(f, run->transcript); !st.ok()) {
    return st;
  }
  absl::StatusOr<double> alpha = MeasureAlphaObs(run->transcript, *g);
  if (!alpha.ok()) return alpha.status();
  const CorenessVector k = ExactCoreness(*g);
  double max_err = 0;
  for (VertexId v : g->Vertices()) {
    max_err = std::max(max_err, std::fabs(run->estimates.values[v] - k[v]));
  }
  AuditReport report;
  report.kind = "alpha";
  report.details = {{"alpha_obs", *alpha},
                    {"max_err", max_err},
                    {"rounds", run->transcript.num_rounds()}};
  if (*protocol == ProtocolKind::kExact) {
    const double excess = SandwichExcess(k, run->estimates, 1.0, *alpha);
    const double shortfall =
        CoreWitnessShortfall(*g, run->estimates, 1.0, *alpha);
    report.details["sandwich_excess"] = excess;
    report.details["core_witness_shortfall"] = shortfall;
    report.pass = excess <= 0 && shortfall <= 0;
  } else {
    report.pass = true;
  }
  return EmitReport(report, a.out);
}

// --- sweep ------------------------------------------------------------------

struct SweepFlags {
  std::vector<size_t> sizes;
  std::string family = "gnp";
  double degree = 8.0;
  std::vector<double> epsilons = {1.0};
  double eta = 1.0;
  std::string counter = "binary-tree";
  std::string memory = "memoryful";
  std::string noise = "laplace";
  std::vector<std::string> protocols = {"exact"};
  int trials = 1;
  uint64_t seed = 0;
  bool no_timing = false;
  int threads = 0;
  std::string out = "-";
};

absl::Status CmdSweep(const SweepFlags& f) {
  ExperimentSpec spec;
  spec.sizes = f.sizes;
  spec.degree = f.degree;
  spec.epsilons = f.epsilons;
  spec.eta = f.eta;
  spec.trials = f.trials;
  spec.seed = f.seed;
  spec.timing = !f.no_timing;
  spec.threads = f.threads;
  absl::StatusOr<GraphFamily> family = ParseGraphFamily(f.family);
  if (!family.ok()) return family.status();
  spec.family = *family;
  absl::StatusOr<CounterKind> counter = ParseCounterKind(f.counter);
  if (!counter.ok()) return counter.status();
  spec.counter = *counter;
  absl::StatusOr<MemoryMode> memory = ParseMemoryMode(f.memory);
  if (!memory.ok()) return memory.status();
  spec.memory = *memory;
  absl::StatusOr<NoiseMode> noise = ParseNoiseMode(f.noise);
  if (!noise.ok()) return noise.status();
  spec.noise = *noise;
  spec.protocols.clear();
  for (const std::string& name : f.protocols) {
    absl::StatusOr<ProtocolKind> protocol = ParseProtocolKind(name);
    if (!protocol.ok()) return protocol.status();
    spec.protocols.push_back(*protocol);
  }
  absl::StatusOr<std::vector<SweepRow>> rows = RunSweep(spec);
  if (!rows.ok()) return rows.status();
  return WriteOutput(f.out, FormatSweepCsv(*rows));
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return ExitCodeFor(status);
}

int Main(int argc, char** argv) {
  CLI::App app{"Locally differentially private core decomposition"};
  app.require_subcommand(1);

  GenerateFlags gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a graph");
  generate->add_option("--family", gen.family, "gnp | regular | path | query-graph")
      ->capture_default_str();
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--p", gen.p, "gnp edge probability");
  generate->add_option("--degree", gen.degree,
                       "gnp expected degree (when --p is absent) or regular "
                       "degree")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--secret", gen.secret, "query: 0/1 string X");
  generate->add_option("--query", gen.query, "query: 0/1 string Q");
  generate->add_option("--out", gen.out, "Output file ('-' for stdout)");

  std::string oracle_graph;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Print exact coreness, k* and (n <= 20) rho* with a witness");
  oracle->add_option("--graph", oracle_graph, "Edge-list file")->required();

  RunFlags exact_flags;
  std::string exact_out = "-";
  CLI::App* run_exact = app.add_subcommand(
      "run-exact", "Exact protocol; CSV vertex,k_true,k_est,round");
  AddRunFlags(run_exact, exact_flags, false);
  run_exact->add_option("--out", exact_out, "CSV file ('-' for stdout)");

  RunFlags approx_flags;
  std::string approx_out = "-";
  CLI::App* run_approx = app.add_subcommand(
      "run-approx", "Approximate protocol; CSV as run-exact plus phase");
  AddRunFlags(run_approx, approx_flags, true);
  run_approx->add_option("--out", approx_out, "CSV file ('-' for stdout)");

  RunFlags densest_flags;
  std::string densest_mode = "exact";
  std::string densest_out = "-";
  CLI::App* run_densest = app.add_subcommand(
      "run-densest", "Densest subgraph from coreness estimates; JSON");
  AddRunFlags(run_densest, densest_flags, true);
  run_densest->add_option("--mode", densest_mode, "exact | approx")
      ->capture_default_str();
  run_densest->add_option("--out", densest_out, "JSON file ('-' for stdout)");

  CLI::App* audit = app.add_subcommand("audit", "Sensitivity and error audits");
  audit->require_subcommand(1);
  AuditFlags audit_flags;
  uint64_t counter_seed = 0;
  CLI::App* audit_counter = audit->add_subcommand(
      "counter-sensitivity", "Neighboring-stream replay of the tree nodes");
  audit_counter->add_option("--horizon", audit_flags.horizon, "Counter horizon T")
      ->capture_default_str();
  audit_counter->add_option("--stream-len", audit_flags.stream_len,
                            "Stream length (default: T)");
  audit_counter->add_option("--trials", audit_flags.trials, "Neighbor pairs")
      ->capture_default_str();
  audit_counter->add_option("--epsilon", audit_flags.counter_epsilon,
                            "Counter budget");
  audit_counter->add_option("--seed", counter_seed, "Stream seed");
  audit_counter->add_option("--out", audit_flags.out, "JSON file");

  RunFlags stream_flags;
  CLI::App* audit_stream = audit->add_subcommand(
      "stream-discrepancy", "Coupled runs on g and g with {u, v} toggled");
  AddRunFlags(audit_stream, stream_flags, true);
  audit_stream->add_option("--u", audit_flags.u, "First endpoint")->required();
  audit_stream->add_option("--v", audit_flags.v, "Second endpoint")
      ->required();
  audit_stream->add_option("--protocol", audit_flags.protocol,
                           "exact | approx");
  audit_stream->add_option("--out", audit_flags.out, "JSON file");

  RunFlags alpha_flags;
  CLI::App* audit_alpha = audit->add_subcommand(
      "alpha", "Measured noisy-degree error and the estimate checks");
  AddRunFlags(audit_alpha, alpha_flags, true);
  audit_alpha->add_option("--protocol", audit_flags.protocol, "exact | approx");
  audit_alpha->add_option("--out", audit_flags.out, "JSON file");

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "CSV family,n,eps,eta,counter,memory,trial,protocol,max_err,rounds,"
      "alpha_obs,ms; LDP_CORE_THREADS caps the worker count");
  sweep->add_option("--sizes", sweep_flags.sizes, "Vertex counts")
      ->delimiter(',')
      ->required();
  sweep->add_option("--family", sweep_flags.family, "gnp | regular | path")
      ->capture_default_str();
  sweep->add_option("--degree", sweep_flags.degree,
                    "gnp expected degree or regular degree")
      ->capture_default_str();
  sweep->add_option("--epsilons", sweep_flags.epsilons, "Budgets")
      ->delimiter(',');
  sweep->add_option("--eta", sweep_flags.eta, "Approximation parameter");
  sweep->add_option("--counter", sweep_flags.counter,
                    "binary-tree | sparse-vector | exact-debug");
  sweep->add_option("--memory", sweep_flags.memory, "memoryful | memoryless");
  sweep->add_option("--noise", sweep_flags.noise, "laplace | disabled");
  sweep->add_option("--protocols", sweep_flags.protocols, "exact,approx")
      ->delimiter(',');
  sweep->add_option("--trials", sweep_flags.trials, "Trials per size")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_flags.seed, "Master seed");
  sweep->add_flag("--no-timing", sweep_flags.no_timing,
                  "Write 0 in the ms column for byte-identical reruns");
  sweep->add_option("--threads", sweep_flags.threads,
                    "Worker threads (0: LDP_CORE_THREADS or all cores)");
  sweep->add_option("--out", sweep_flags.out, "CSV file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  absl::Status status;
  absl::StatusOr<bool> audit_pass = true;
  if (generate->parsed()) {
    status = CmdGenerate(gen);
  } else if (oracle->parsed()) {
    status = CmdOracle(oracle_graph);
  } else if (run_exact->parsed()) {
    status = CmdRun(exact_flags, ProtocolKind::kExact, exact_out);
  } else if (run_approx->parsed()) {
    status = CmdRun(approx_flags, ProtocolKind::kApprox, approx_out);
  } else if (run_densest->parsed()) {
    status = CmdDensest(densest_flags, densest_mode, densest_out);
  } else if (audit_counter->parsed()) {
    audit_pass = CmdAuditCounter(audit_flags, counter_seed);
  } else if (audit_stream->parsed()) {
    audit_pass = CmdAuditStream(stream_flags, audit_flags);
  } else if (audit_alpha->parsed()) {
    audit_pass = CmdAuditAlpha(alpha_flags, audit_flags);
  } else if (sweep->parsed()) {
    status = CmdSweep(sweep_flags);
  }
  if (!status.ok()) return Fail(status);
  if (!audit_pass.ok()) return Fail(audit_pass.status());
  return *audit_pass ? 0 : kAuditFailed;
}

}  // namespace
}  // namespace ldpcore

int main(int argc, char** argv) { return ldpcore::Main(argc, argv); }
