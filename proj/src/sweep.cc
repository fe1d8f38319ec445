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

#include "ldpcore/sweep.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "ldpcore/audit.h"
#include "ldpcore/core_approx.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/format.h"
#include "ldpcore/generators.h"
#include "ldpcore/oracles.h"
#include "ldpcore/rng.h"

namespace ldpcore {
namespace {

struct Job {
  size_t n;
  size_t eps_index;
  int trial;
};

absl::StatusOr<SweepRow> RunOne(const Graph& g, const CorenessVector& k,
                                const RunConfig& cfg, ProtocolKind protocol,
                                const ExperimentSpec& spec) {
  AlphaTracker tracker(g);
  absl::Status observed = absl::OkStatus();
  RunOptions options;
  options.keep_messages = cfg.memory == MemoryMode::kMemoryless;
  options.observer = [&](const Round& round) {
    if (observed.ok()) observed = tracker.Observe(round);
  };
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<ProtocolRun> run = protocol == ProtocolKind::kExact
                                        ? RunExactCore(g, cfg, options)
                                        : RunApproxCore(g, cfg, options);
  const auto stop = std::chrono::steady_clock::now();
  if (!run.ok()) return run.status();
  if (!observed.ok()) return observed;
  SweepRow row;
  row.family = spec.family;
  row.n = g.num_vertices();
  row.epsilon = cfg.epsilon;
  row.eta = cfg.eta;
  row.counter = cfg.counter;
  row.memory = cfg.memory;
  row.protocol = protocol;
  for (VertexId v = 0; v < k.size(); ++v) {
    row.max_err = std::max(row.max_err, std::fabs(run->estimates.values[v] - k[v]));
  }
  row.rounds = run->transcript.num_rounds();
  row.alpha_obs = tracker.alpha();
  if (spec.timing) {
    row.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  return row;
}

absl::StatusOr<std::vector<SweepRow>> RunJob(const ExperimentSpec& spec,
                                             const Job& job) {
  const uint64_t graph_seed =
      DeriveSeed(spec.seed, {0x6772617068ULL, static_cast<uint64_t>(spec.family),
                             job.n, static_cast<uint64_t>(job.trial)});
  absl::StatusOr<Graph> g =
      GenerateFamily(spec.family, job.n, spec.degree, graph_seed);
  if (!g.ok()) return g.status();
  const CorenessVector k = ExactCoreness(*g);
  RunConfig cfg;
  cfg.epsilon = spec.epsilons[job.eps_index];
  cfg.eta = spec.eta;
  cfg.counter = spec.counter;
  cfg.memory = spec.memory;
  cfg.noise = spec.noise;
  cfg.seed = DeriveSeed(spec.seed, {0x72756e73ULL, job.n, job.eps_index,
                                    static_cast<uint64_t>(job.trial)});
  std::vector<SweepRow> rows;
  for (ProtocolKind protocol : spec.protocols) {
    absl::StatusOr<SweepRow> row = RunOne(*g, k, cfg, protocol, spec);
    if (!row.ok()) {
      return absl::Status(row.status().code(),
                          absl::StrCat("n=", job.n, " trial ", job.trial, " ",
                                       ProtocolKindName(protocol), ": ",
                                       row.status().message()));
    }
    row->trial = job.trial;
    rows.push_back(*row);
  }
  return rows;
}

}  // namespace

std::string GraphFamilyName(GraphFamily family) {
  switch (family) {
    case GraphFamily::kGnp:
      return "gnp";
    case GraphFamily::kRegular:
      return "regular";
    case GraphFamily::kPath:
      return "path";
  }
  return "unknown";
}

absl::StatusOr<GraphFamily> ParseGraphFamily(const std::string& name) {
  if (name == "gnp") return GraphFamily::kGnp;
  if (name == "regular") return GraphFamily::kRegular;
  if (name == "path") return GraphFamily::kPath;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown graph family \"", name, "\" (gnp|regular|path)"));
}

absl::StatusOr<Graph> GenerateFamily(GraphFamily family, size_t n,
                                     double degree, uint64_t seed) {
  switch (family) {
    case GraphFamily::kGnp:
      if (n == 0) return Graph::Empty(0);
      return GenGnp(n, std::min(1.0, degree / static_cast<double>(n)), seed);
    case GraphFamily::kRegular:
      if (degree < 0 || degree != std::floor(degree)) {
        return absl::InvalidArgumentError(
            absl::StrCat("regular graphs need an integer degree, got ", degree));
      }
      return GenRegular(n, static_cast<size_t>(degree), seed);
    case GraphFamily::kPath:
      return GenPath(n);
  }
  return absl::InvalidArgumentError("unknown graph family");
}

absl::Status ValidateExperimentSpec(const ExperimentSpec& spec) {
  if (spec.sizes.empty()) {
    return absl::InvalidArgumentError("a sweep needs at least one size");
  }
  if (spec.epsilons.empty() || spec.protocols.empty()) {
    return absl::InvalidArgumentError(
        "a sweep needs at least one epsilon and one protocol");
  }
  if (spec.trials < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("trials must be >= 1, got ", spec.trials));
  }
  if (!(spec.degree >= 0) || !std::isfinite(spec.degree)) {
    return absl::InvalidArgumentError(
        absl::StrCat("degree must be nonnegative, got ", spec.degree));
  }
  for (size_t n : spec.sizes) {
    if (n < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("sizes must be >= 2, got ", n));
    }
  }
  for (double eps : spec.epsilons) {
    for (ProtocolKind protocol : spec.protocols) {
      RunConfig cfg;
      cfg.epsilon = eps;
      cfg.eta = spec.eta;
      cfg.counter = spec.counter;
      cfg.memory = spec.memory;
      cfg.noise = spec.noise;
      if (absl::Status st = ValidateRunConfig(cfg, protocol); !st.ok()) {
        return st;
      }
    }
  }
  return absl::OkStatus();
}

int ResolveThreadCount(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LDP_CORE_THREADS"); env != nullptr) {
    int value = 0;
    if (absl::SimpleAtoi(env, &value) && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

absl::StatusOr<std::vector<SweepRow>> RunSweep(const ExperimentSpec& spec) {
  if (absl::Status st = ValidateExperimentSpec(spec); !st.ok()) return st;
  std::vector<Job> jobs;
  for (size_t n : spec.sizes) {
    for (size_t e = 0; e < spec.epsilons.size(); ++e) {
      for (int trial = 0; trial < spec.trials; ++trial) {
        jobs.push_back({n, e, trial});
      }
    }
  }
  std::vector<absl::StatusOr<std::vector<SweepRow>>> results(
      jobs.size(), absl::UnknownError("not run"));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = RunJob(spec, jobs[i]);
    }
  };
  const int threads = std::min<int>(ResolveThreadCount(spec.threads),
                                    static_cast<int>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::vector<SweepRow> rows;
  for (auto& result : results) {
    if (!result.ok()) return result.status();
    rows.insert(rows.end(), result->begin(), result->end());
  }
  return rows;
}

std::string SweepCsvHeader() {
  return "family,n,eps,eta,counter,memory,trial,protocol,max_err,rounds,"
         "alpha_obs,ms";
}

std::string FormatSweepCsv(const std::vector<SweepRow>& rows) {
  std::string out = SweepCsvHeader() + "\n";
  for (const SweepRow& r : rows) {
    absl::StrAppend(&out, GraphFamilyName(r.family), ",", r.n, ",",
                    FormatDouble(r.epsilon), ",", FormatDouble(r.eta), ",",
                    CounterKindName(r.counter), ",", MemoryModeName(r.memory),
                    ",", r.trial, ",", ProtocolKindName(r.protocol), ",",
                    FormatDouble(r.max_err), ",", r.rounds, ",",
                    FormatDouble(r.alpha_obs), ",", FormatDouble(r.ms), "\n");
  }
  return out;
}

}  // namespace ldpcore
