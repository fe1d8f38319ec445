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

// Laplace noise addressed by label.
//
// A draw is a pure function of (master key, label): there is no hidden
// generator state. Two mechanisms that consume noise under the same labels
// are therefore coupled draw-for-draw, which is what lets the memoryless and
// memoryful protocol variants, and runs on neighboring graphs, be compared
// exactly.
//
// Uniforms come from the top 53 bits of a 64-bit hash, so the inverse-CDF
// sampler cannot produce magnitudes beyond about 37 scale units.

#ifndef LDPCORE_NOISE_H_
#define LDPCORE_NOISE_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"

namespace ldpcore {

enum class NoiseMode { kLaplace, kDisabled };

std::string NoiseModeName(NoiseMode mode);
absl::StatusOr<NoiseMode> ParseNoiseMode(const std::string& name);

// What a draw is for. Part of every label.
enum class NoiseRole : uint32_t {
  kInitialDegree = 1,
  kTreeNode = 2,
  kSvThreshold = 3,
  kSvQuery = 4,
  kSvTreeNode = 5,
  kTest = 99,
};

struct NoiseLabel {
  uint64_t owner = 0;  // vertex id or stream id
  NoiseRole role = NoiseRole::kTest;
  uint32_t slot = 0;   // e.g. tree level
  uint64_t index = 0;  // e.g. node index within the level
};

class NoiseSource {
 public:
  NoiseSource(NoiseMode mode, double scale, uint64_t key)
      : mode_(mode), scale_(scale), key_(key) {}

  static NoiseSource Disabled() { return NoiseSource(NoiseMode::kDisabled, 0, 0); }

  NoiseMode mode() const { return mode_; }
  double scale() const { return scale_; }
  uint64_t key() const { return key_; }
  bool enabled() const { return mode_ == NoiseMode::kLaplace; }

  // Same key and mode, different scale.
  NoiseSource WithScale(double scale) const {
    return NoiseSource(mode_, scale, key_);
  }

 private:
  NoiseMode mode_;
  double scale_;
  uint64_t key_;
};

// One Lap(scale) draw, or exactly 0 when disabled. Requires scale > 0 in
// Laplace mode.
double SampleLaplace(const NoiseSource& src, const NoiseLabel& label);

// The raw uniform in (0, 1) behind a label, for independence tests.
double LabelUniform(uint64_t key, const NoiseLabel& label);

// b * ln(1/beta): Pr[|Lap(b)| > TailRadius(b, beta)] = beta.
double TailRadius(double scale, double beta);

}  // namespace ldpcore

#endif  // LDPCORE_NOISE_H_
