// Copyright 2026 The iqkit Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace iqkit {

// Splittable counter-based generator (splitmix64 core). Child streams are
// derived by key, not by sharing state, so a batch driver can hand every
// task its own stream and the outputs stay byte-identical regardless of
// how the tasks are scheduled.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed + kGamma)) {}

  // Stream keyed on (seed, stream_index). Used for per-image and per-repeat
  // fan-out: reordering parallel execution never changes any stream.
  static Rng derive(uint64_t seed, uint64_t stream_index) {
    return Rng(mix(seed + kGamma) ^ mix(stream_index + kGamma2));
  }

  uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two draws.
  double next_gaussian();

  // Unbiased uniform integer in [0, n). n must be positive.
  uint64_t next_below(uint64_t n);

  // Child stream; consumes one draw from this stream.
  Rng split() { return Rng(next_u64()); }

  // Child stream keyed by idx without consuming state. Stable for a given
  // (current state, idx) pair; used for per-row noise fields.
  Rng stream(uint64_t idx) const {
    return Rng(mix(state_) ^ mix(idx + kGamma2));
  }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr uint64_t kGamma2 = 0xD1B54A32D192ED03ull;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace iqkit
