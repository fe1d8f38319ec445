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

// Adaptive continual counters: insert one nonnegative integer per step, get
// back a noisy prefix sum.
//
// Binary tree mechanism. Step t materializes the dyadic node at level
// i = (lowest set bit of t), covering inputs t-2^i+1..t, adds Laplace noise
// to it and clears the levels below i. The release at t is the sum of the
// noisy nodes at the set bits of t. An input lies in at most
// floor(log2 T) + 1 materialized nodes, so each node gets
// Lap((floor(log2 T) + 1) / epsilon).
//
// Sparse-vector counter. The stream is cut into segments by an
// above-threshold test on the count accumulated since the last cut (budget
// epsilon/2). Each closed segment's total is fed to a chain of binary trees
// with doubling horizons 1, 2, 4, ... (budget epsilon/2), so the tree noise
// grows with the number of segments, not with t. Needs persistent memory for
// the noisy threshold; there is no memoryless form.

#ifndef LDPCORE_COUNTING_H_
#define LDPCORE_COUNTING_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldpcore/noise.h"

namespace ldpcore {

enum class CounterKind { kBinaryTree, kSparseVector, kExactDebug };

std::string CounterKindName(CounterKind kind);
absl::StatusOr<CounterKind> ParseCounterKind(const std::string& name);

struct CounterConfig {
  int64_t horizon = 1;  // T, maximum number of insertions
  double epsilon = 1.0;
  CounterKind kind = CounterKind::kBinaryTree;
  double beta = 0.01;  // failure probability used by the error bounds
};

absl::Status ValidateCounterConfig(const CounterConfig& cfg);

// ceil(log2 T); 0 for T = 1.
int TreeHeight(int64_t horizon);
// floor(log2 T) + 1: the most materialized nodes that share one input.
int TreeLevels(int64_t horizon);
// Laplace scale of every tree node.
double TreeNodeScale(int64_t horizon, double epsilon);

struct BinaryTreeState {
  int64_t horizon = 1;
  int64_t t = 0;
  std::vector<int64_t> alpha;     // exact partial sums, one per level
  std::vector<double> alpha_hat;  // noisy partial sums, one per level

  friend bool operator==(const BinaryTreeState&,
                         const BinaryTreeState&) = default;
};

BinaryTreeState FreshTreeState(int64_t horizon);

// Where a tree's node noise comes from. Node (level j, index k) uses label
// {owner, role, slot_offset + j, k}.
struct TreeNoise {
  NoiseSource source;  // scale already set to the node scale
  uint64_t owner = 0;
  NoiseRole role = NoiseRole::kTreeNode;
  uint32_t slot_offset = 0;
};

struct TreeStep {
  int level = 0;            // i, the level materialized at this step
  double node_value = 0.0;  // its noisy value
  double released = 0.0;    // sum of noisy nodes at the set bits of t
  int noise_draws = 0;
};

// Advances `state` by one input. OutOfRange past the horizon,
// InvalidArgument for a negative input.
absl::StatusOr<TreeStep> BtInsert(BinaryTreeState& state, int64_t x,
                                  const TreeNoise& noise);

// Sum of alpha_hat over the set bits of state.t, lowest level first.
double BtReleased(const BinaryTreeState& state);

// Rebuilds the state a memoryful tree holds after consuming `inputs` and
// releasing the per-step node values `node_outputs`. Needs no noise: every
// noisy node still in the state is one of the released node values.
absl::StatusOr<BinaryTreeState> BtStateFromHistory(
    std::span<const int64_t> inputs, std::span<const double> node_outputs,
    const CounterConfig& cfg);

// Error bound for a tree with horizon t, valid at any single step with
// probability >= 1 - beta: at most 1 + ceil(log2 t) nodes are summed, and
// each exceeds scale * ln((1 + ceil(log2 t)) / beta) with probability at
// most beta / (1 + ceil(log2 t)).
double BtErrorBound(int64_t t, double beta, double epsilon);

// Parameters of the sparse-vector counter derived from its config.
struct SparseVectorCalibration {
  double svt_epsilon = 0;
  double tree_epsilon = 0;
  double threshold_scale = 0;  // Lap scale on the per-segment threshold
  double query_scale = 0;      // Lap scale on each comparison
  double threshold = 0;        // base cut threshold (0 without noise)
};

SparseVectorCalibration CalibrateSparseVector(const CounterConfig& cfg,
                                              bool noise_enabled);

// Single-step error bound (probability >= 1 - beta) of the sparse-vector
// counter at time t with true count `true_count`; the constants are this
// implementation's, checked empirically in the tests.
double SvErrorBound(const CounterConfig& cfg, int64_t t, int64_t true_count);

struct CounterRelease {
  double sum = 0.0;
  // Binary tree only: the node value materialized at this step.
  std::optional<double> node;
};

class AdaptiveCounter {
 public:
  virtual ~AdaptiveCounter() = default;

  virtual absl::StatusOr<CounterRelease> Insert(int64_t x) = 0;
  virtual int64_t time() const = 0;
  virtual int64_t horizon() const = 0;
  virtual CounterKind kind() const = 0;
};

class BinaryTreeCounter final : public AdaptiveCounter {
 public:
  BinaryTreeCounter(const CounterConfig& cfg, const NoiseSource& noise,
                    uint64_t owner);
  // Resumes from a reconstructed state.
  BinaryTreeCounter(const CounterConfig& cfg, const NoiseSource& noise,
                    uint64_t owner, BinaryTreeState state);

  absl::StatusOr<CounterRelease> Insert(int64_t x) override;
  int64_t time() const override { return state_.t; }
  int64_t horizon() const override { return state_.horizon; }
  CounterKind kind() const override { return CounterKind::kBinaryTree; }

  const BinaryTreeState& state() const { return state_; }
  const TreeStep& last_step() const { return last_step_; }

 private:
  BinaryTreeState state_;
  TreeNoise noise_;
  TreeStep last_step_;
};

class SparseVectorCounter final : public AdaptiveCounter {
 public:
  SparseVectorCounter(const CounterConfig& cfg, const NoiseSource& noise,
                      uint64_t owner);

  absl::StatusOr<CounterRelease> Insert(int64_t x) override;
  int64_t time() const override { return t_; }
  int64_t horizon() const override { return horizon_; }
  CounterKind kind() const override { return CounterKind::kSparseVector; }

  int64_t segments_closed() const { return segments_closed_; }
  const SparseVectorCalibration& calibration() const { return calib_; }

 private:
  void StartSegment();

  int64_t horizon_;
  SparseVectorCalibration calib_;
  NoiseSource noise_;
  uint64_t owner_;

  int64_t t_ = 0;
  int64_t pending_ = 0;  // true count since the last cut
  double noisy_threshold_ = 0;
  int64_t segments_closed_ = 0;

  // Segment totals go to tree number `tree_index_` (horizon 2^tree_index_);
  // trees before it are complete and summarized by `closed_trees_sum_`.
  int tree_index_ = 0;
  BinaryTreeState tree_;
  double closed_trees_sum_ = 0;
  double released_ = 0;
};

// Exact prefix sums; for oracle-equivalence runs only.
class ExactCounter final : public AdaptiveCounter {
 public:
  explicit ExactCounter(int64_t horizon) : horizon_(horizon) {}

  absl::StatusOr<CounterRelease> Insert(int64_t x) override;
  int64_t time() const override { return t_; }
  int64_t horizon() const override { return horizon_; }
  CounterKind kind() const override { return CounterKind::kExactDebug; }

 private:
  int64_t horizon_;
  int64_t t_ = 0;
  int64_t sum_ = 0;
};

// `noise` supplies the mode and key; node and comparison scales are derived
// from `cfg`. `owner` separates the noise of different counters.
absl::StatusOr<std::unique_ptr<AdaptiveCounter>> MakeCounter(
    const CounterConfig& cfg, const NoiseSource& noise, uint64_t owner);

}  // namespace ldpcore

#endif  // LDPCORE_COUNTING_H_
