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

#include "ldpcore/counting.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace ldpcore {
namespace {

absl::Status CheckInsert(int64_t t, int64_t horizon, int64_t x) {
  if (t >= horizon) {
    return absl::OutOfRangeError(
        absl::StrCat("stream overflow: counter horizon ", horizon, " reached"));
  }
  if (x < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("stream elements must be nonnegative, got ", x));
  }
  return absl::OkStatus();
}

int FloorLog2(uint64_t v) { return 63 - std::countl_zero(v); }

}  // namespace

std::string CounterKindName(CounterKind kind) {
  switch (kind) {
    case CounterKind::kBinaryTree:
      return "binary-tree";
    case CounterKind::kSparseVector:
      return "sparse-vector";
    case CounterKind::kExactDebug:
      return "exact-debug";
  }
  return "unknown";
}

absl::StatusOr<CounterKind> ParseCounterKind(const std::string& name) {
  if (name == "binary-tree") return CounterKind::kBinaryTree;
  if (name == "sparse-vector") return CounterKind::kSparseVector;
  if (name == "exact-debug") return CounterKind::kExactDebug;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown counter \"", name,
      "\" (binary-tree|sparse-vector|exact-debug)"));
}

absl::Status ValidateCounterConfig(const CounterConfig& cfg) {
  if (cfg.horizon < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("counter horizon must be >= 1, got ", cfg.horizon));
  }
  if (!(cfg.epsilon > 0) || !std::isfinite(cfg.epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrCat("counter epsilon must be positive, got ", cfg.epsilon));
  }
  if (!(cfg.beta > 0 && cfg.beta < 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("counter beta must lie in (0, 1), got ", cfg.beta));
  }
  return absl::OkStatus();
}

int TreeHeight(int64_t horizon) {
  return horizon <= 1 ? 0 : FloorLog2(static_cast<uint64_t>(horizon - 1)) + 1;
}

int TreeLevels(int64_t horizon) {
  return FloorLog2(static_cast<uint64_t>(std::max<int64_t>(horizon, 1))) + 1;
}

double TreeNodeScale(int64_t horizon, double epsilon) {
  return TreeLevels(horizon) / epsilon;
}

BinaryTreeState FreshTreeState(int64_t horizon) {
  BinaryTreeState s;
  s.horizon = horizon;
  s.alpha.assign(TreeHeight(horizon) + 1, 0);
  s.alpha_hat.assign(TreeHeight(horizon) + 1, 0.0);
  return s;
}

absl::StatusOr<TreeStep> BtInsert(BinaryTreeState& state, int64_t x,
                                  const TreeNoise& noise) {
  if (absl::Status st = CheckInsert(state.t, state.horizon, x); !st.ok()) {
    return st;
  }
  const int64_t t = ++state.t;
  const int i = std::countr_zero(static_cast<uint64_t>(t));
  // The levels below i hold the dyadic blocks of t-1, i.e. exactly the
  // previous 2^i - 1 inputs.
  int64_t block = x;
  for (int j = 0; j < i; ++j) block += state.alpha[j];
  TreeStep step;
  step.level = i;
  state.alpha[i] = block;
  state.alpha_hat[i] =
      static_cast<double>(block) +
      SampleLaplace(noise.source,
                    {noise.owner, noise.role,
                     noise.slot_offset + static_cast<uint32_t>(i),
                     static_cast<uint64_t>(t) >> i});
  step.noise_draws = 1;
  for (int j = 0; j < i; ++j) {
    state.alpha[j] = 0;
    state.alpha_hat[j] = 0.0;
  }
  step.node_value = state.alpha_hat[i];
  step.released = BtReleased(state);
  return step;
}

double BtReleased(const BinaryTreeState& state) {
  double sum = 0.0;
  for (uint64_t bits = static_cast<uint64_t>(state.t); bits != 0;
       bits &= bits - 1) {
    sum += state.alpha_hat[std::countr_zero(bits)];
  }
  return sum;
}

absl::StatusOr<BinaryTreeState> BtStateFromHistory(
    std::span<const int64_t> inputs, std::span<const double> node_outputs,
    const CounterConfig& cfg) {
  if (inputs.size() != node_outputs.size()) {
    return absl::DataLossError(absl::StrCat(
        "corrupt counter history: ", inputs.size(), " inputs but ",
        node_outputs.size(), " node outputs"));
  }
  if (static_cast<int64_t>(inputs.size()) > cfg.horizon) {
    return absl::DataLossError(absl::StrCat(
        "corrupt counter history: ", inputs.size(),
        " steps exceed the horizon ", cfg.horizon));
  }
  BinaryTreeState state = FreshTreeState(cfg.horizon);
  for (size_t s = 0; s < inputs.size(); ++s) {
    const int64_t t = ++state.t;
    const int i = std::countr_zero(static_cast<uint64_t>(t));
    int64_t block = inputs[s];
    for (int j = 0; j < i; ++j) block += state.alpha[j];
    state.alpha[i] = block;
    state.alpha_hat[i] = node_outputs[s];
    for (int j = 0; j < i; ++j) {
      state.alpha[j] = 0;
      state.alpha_hat[j] = 0.0;
    }
  }
  return state;
}

double BtErrorBound(int64_t t, double beta, double epsilon) {
  const double summed = 1.0 + TreeHeight(t);
  return TreeNodeScale(t, epsilon) * summed * std::log(summed / beta);
}

SparseVectorCalibration CalibrateSparseVector(const CounterConfig& cfg,
                                              bool noise_enabled) {
  SparseVectorCalibration c;
  c.svt_epsilon = cfg.epsilon / 2;
  c.tree_epsilon = cfg.epsilon / 2;
  c.threshold_scale = 2.0 / c.svt_epsilon;
  c.query_scale = 4.0 / c.svt_epsilon;
  if (noise_enabled) {
    const double horizon = static_cast<double>(cfg.horizon);
    c.threshold = c.query_scale * std::log(2 * horizon / cfg.beta) +
                  c.threshold_scale * std::log(2 / cfg.beta);
  }
  return c;
}

double SvErrorBound(const CounterConfig& cfg, int64_t t, int64_t true_count) {
  const SparseVectorCalibration c = CalibrateSparseVector(cfg, true);
  const double lag = c.threshold + (c.threshold_scale + c.query_scale) *
                                       std::log(3 / cfg.beta);
  const int64_t segments = std::max<int64_t>(1, std::min(true_count, t));
  const int k = FloorLog2(static_cast<uint64_t>(segments));
  const double nodes = 2.0 * (k + 1);
  const double tree =
      nodes * ((k + 1) / c.tree_epsilon) * std::log(3 * nodes / cfg.beta);
  return lag + tree;
}

BinaryTreeCounter::BinaryTreeCounter(const CounterConfig& cfg,
                                     const NoiseSource& noise, uint64_t owner)
    : BinaryTreeCounter(cfg, noise, owner, FreshTreeState(cfg.horizon)) {}

BinaryTreeCounter::BinaryTreeCounter(const CounterConfig& cfg,
                                     const NoiseSource& noise, uint64_t owner,
                                     BinaryTreeState state)
    : state_(std::move(state)),
      noise_{noise.WithScale(TreeNodeScale(cfg.horizon, cfg.epsilon)), owner,
             NoiseRole::kTreeNode, 0} {}

absl::StatusOr<CounterRelease> BinaryTreeCounter::Insert(int64_t x) {
  absl::StatusOr<TreeStep> step = BtInsert(state_, x, noise_);
  if (!step.ok()) return step.status();
  last_step_ = *step;
  return CounterRelease{step->released, step->node_value};
}

SparseVectorCounter::SparseVectorCounter(const CounterConfig& cfg,
                                         const NoiseSource& noise,
                                         uint64_t owner)
    : horizon_(cfg.horizon),
      calib_(CalibrateSparseVector(cfg, noise.enabled())),
      noise_(noise),
      owner_(owner),
      tree_(FreshTreeState(1)) {
  StartSegment();
}

void SparseVectorCounter::StartSegment() {
  noisy_threshold_ =
      calib_.threshold +
      SampleLaplace(noise_.WithScale(calib_.threshold_scale),
                    {owner_, NoiseRole::kSvThreshold, 0,
                     static_cast<uint64_t>(segments_closed_)});
}

absl::StatusOr<CounterRelease> SparseVectorCounter::Insert(int64_t x) {
  if (absl::Status st = CheckInsert(t_, horizon_, x); !st.ok()) return st;
  ++t_;
  pending_ += x;
  const double query_noise =
      SampleLaplace(noise_.WithScale(calib_.query_scale),
                    {owner_, NoiseRole::kSvQuery, 0, static_cast<uint64_t>(t_)});
  if (static_cast<double>(pending_) + query_noise > noisy_threshold_) {
    if (tree_.t == tree_.horizon) {
      closed_trees_sum_ += BtReleased(tree_);
      ++tree_index_;
      tree_ = FreshTreeState(int64_t{1} << tree_index_);
    }
    const TreeNoise tree_noise{
        noise_.WithScale(TreeNodeScale(tree_.horizon, calib_.tree_epsilon)),
        owner_, NoiseRole::kSvTreeNode, static_cast<uint32_t>(tree_index_) * 64};
    absl::StatusOr<TreeStep> step = BtInsert(tree_, pending_, tree_noise);
    if (!step.ok()) return step.status();
    released_ = closed_trees_sum_ + step->released;
    pending_ = 0;
    ++segments_closed_;
    StartSegment();
  }
  return CounterRelease{released_, std::nullopt};
}

absl::StatusOr<CounterRelease> ExactCounter::Insert(int64_t x) {
  if (absl::Status st = CheckInsert(t_, horizon_, x); !st.ok()) return st;
  ++t_;
  sum_ += x;
  return CounterRelease{static_cast<double>(sum_), std::nullopt};
}

absl::StatusOr<std::unique_ptr<AdaptiveCounter>> MakeCounter(
    const CounterConfig& cfg, const NoiseSource& noise, uint64_t owner) {
  if (absl::Status st = ValidateCounterConfig(cfg); !st.ok()) return st;
  switch (cfg.kind) {
    case CounterKind::kBinaryTree:
      return std::make_unique<BinaryTreeCounter>(cfg, noise, owner);
    case CounterKind::kSparseVector:
      return std::make_unique<SparseVectorCounter>(cfg, noise, owner);
    case CounterKind::kExactDebug:
      return std::make_unique<ExactCounter>(cfg.horizon);
  }
  return absl::InvalidArgumentError("unknown counter kind");
}

}  // namespace ldpcore
