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

#include "iqkit/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace iqkit {

double mse(const ImageBuffer& a, const ImageBuffer& b) {
  if (!a.same_dims(b)) {
    throw std::invalid_argument("mse: dimension mismatch");
  }
  const int64_t n = static_cast<int64_t>(a.data.size());
  double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc) \
    if (n >= 1 << 16)
  for (int64_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(a.data[i]) - b.data[i];
    acc += d * d;
  }
  return acc / static_cast<double>(n);
}

double psnr(const ImageBuffer& a, const ImageBuffer& b) {
  const double err = mse(a, b);
  if (err <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / err);
}

}  // namespace iqkit
