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

#include "iqkit/image.hpp"

#include <cstdint>

namespace iqkit {

void clamp_image(ImageBuffer& img) {
  const int64_t n = static_cast<int64_t>(img.data.size());
  float* d = img.data.data();
#pragma omp parallel for schedule(static) if (n >= 1 << 16)
  for (int64_t i = 0; i < n; ++i) {
    d[i] = clamp01(d[i]);
  }
}

}  // namespace iqkit
