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

// Experiment sweeps: for every size, epsilon and trial, generate a graph,
// run the requested protocols and emit one CSV row per run with the largest
// coreness error against the exact oracle, the round count, the measured
// noisy-degree error and the wall time.

#ifndef LDPCORE_SWEEP_H_
#define LDPCORE_SWEEP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ldpcore/counting.h"
#include "ldpcore/graph.h"
#include "ldpcore/local_sim.h"
#include "ldpcore/noise.h"

namespace ldpcore {

enum class GraphFamily { kGnp, kRegular, kPath };

std::string GraphFamilyName(GraphFamily family);
absl::StatusOr<GraphFamily> ParseGraphFamily(const std::string& name);

// gnp: G(n, degree / n). regular: degree-regular. path: degree ignored.
absl::StatusOr<Graph> GenerateFamily(GraphFamily family, size_t n,
                                     double degree, uint64_t seed);

struct ExperimentSpec {
  std::vector<size_t> sizes;
  GraphFamily family = GraphFamily::kGnp;
  double degree = 8.0;
  std::vector<double> epsilons = {1.0};
  double eta = 1.0;
  CounterKind counter = CounterKind::kBinaryTree;
  MemoryMode memory = MemoryMode::kMemoryful;
  NoiseMode noise = NoiseMode::kLaplace;
  std::vector<ProtocolKind> protocols = {ProtocolKind::kExact};
  int trials = 1;
  uint64_t seed = 0;
  // Write 0 in the ms column so that reruns give identical files.
  bool timing = true;
  // Worker threads; 0 reads LDP_CORE_THREADS, then the hardware count.
  int threads = 0;
};

absl::Status ValidateExperimentSpec(const ExperimentSpec& spec);

struct SweepRow {
  GraphFamily family = GraphFamily::kGnp;
  size_t n = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  CounterKind counter = CounterKind::kBinaryTree;
  MemoryMode memory = MemoryMode::kMemoryful;
  int trial = 0;
  ProtocolKind protocol = ProtocolKind::kExact;
  double max_err = 0.0;
  int64_t rounds = 0;
  double alpha_obs = 0.0;
  double ms = 0.0;
};

// Rows are ordered by size, epsilon, trial, protocol regardless of the
// thread count. Graph seeds depend on (seed, family, n, trial) only, so
// every epsilon and protocol sees the same graphs.
absl::StatusOr<std::vector<SweepRow>> RunSweep(const ExperimentSpec& spec);

// Resolves a requested thread count as described for ExperimentSpec.
int ResolveThreadCount(int requested);

std::string SweepCsvHeader();
std::string FormatSweepCsv(const std::vector<SweepRow>& rows);

}  // namespace ldpcore

#endif  // LDPCORE_SWEEP_H_
