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

#ifndef LDPCORE_RNG_H_
#define LDPCORE_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace ldpcore {

// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds `parts` into `seed`; distinct part lists give unrelated seeds.
constexpr uint64_t DeriveSeed(uint64_t seed,
                              std::initializer_list<uint64_t> parts) {
  uint64_t h = Mix64(seed);
  for (uint64_t p : parts) h = Mix64(h ^ Mix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

// Maps 64 random bits to a double in the open interval (0, 1) using the top
// 53 bits.
constexpr double BitsToOpenUnit(uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Thin wrapper over mt19937_64 whose derived draws are specified here rather
// than by the standard library, so outputs are identical across toolchains.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  uint64_t Bits() { return engine_(); }
  double Uniform() { return BitsToOpenUnit(engine_()); }

  // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
  uint64_t Below(uint64_t n) {
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n + 1) % n;
    uint64_t r;
    do {
      r = engine_();
    } while (r > limit);
    return r % n;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ldpcore

#endif  // LDPCORE_RNG_H_
