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

#include "ldpcore/noise.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "ldpcore/rng.h"

namespace ldpcore {

std::string NoiseModeName(NoiseMode mode) {
  return mode == NoiseMode::kLaplace ? "laplace" : "disabled";
}

absl::StatusOr<NoiseMode> ParseNoiseMode(const std::string& name) {
  if (name == "laplace") return NoiseMode::kLaplace;
  if (name == "disabled") return NoiseMode::kDisabled;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown noise mode \"", name, "\" (laplace|disabled)"));
}

double LabelUniform(uint64_t key, const NoiseLabel& label) {
  uint64_t h = Mix64(key ^ 0x6c61706c616365ULL);
  h = Mix64(h ^ label.owner);
  h = Mix64(h ^ ((static_cast<uint64_t>(label.role) << 32) | label.slot));
  h = Mix64(h ^ label.index);
  return BitsToOpenUnit(h);
}

double SampleLaplace(const NoiseSource& src, const NoiseLabel& label) {
  if (!src.enabled()) return 0.0;
  // Inverse CDF of Lap(b) at p: b ln(2p) below 1/2, -b ln(2(1-p)) above.
  const double p = LabelUniform(src.key(), label);
  return p < 0.5 ? src.scale() * std::log(2.0 * p)
                 : -src.scale() * std::log(2.0 * (1.0 - p));
}

double TailRadius(double scale, double beta) {
  return scale * std::log(1.0 / beta);
}

}  // namespace ldpcore
