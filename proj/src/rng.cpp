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

#include "iqkit/rng.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace iqkit {

double Rng::next_gaussian() {
  double u1 = next_double();
  double u2 = next_double();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t Rng::next_below(uint64_t n) {
  assert(n > 0);
  // Reject above the largest multiple of n so the modulo is unbiased.
  const uint64_t bound = UINT64_MAX / n * n;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= bound);
  return x % n;
}

}  // namespace iqkit
