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

#include "iqkit/resample.hpp"

#include <cmath>
#include <stdexcept>

namespace iqkit {

ImageBuffer resize(const ImageBuffer& img, int out_w, int out_h,
                   Interp method) {
  if (out_w < 1 || out_h < 1) {
    throw std::invalid_argument("resize: target dimensions must be positive");
  }
  ImageBuffer out(out_w, out_h);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;

  if (method == Interp::kNearest) {
#pragma omp parallel for schedule(static) if (out_w * out_h >= 1 << 14)
    for (int y = 0; y < out_h; ++y) {
      const int iy = std::min(img.height - 1,
                              static_cast<int>((y + 0.5) * sy));
      for (int c = 0; c < 3; ++c) {
        const float* irow = img.row(c, iy);
        float* orow = out.row(c, y);
        for (int x = 0; x < out_w; ++x) {
          const int ix = std::min(img.width - 1,
                                  static_cast<int>((x + 0.5) * sx));
          orow[x] = irow[ix];
        }
      }
    }
    return out;
  }

#pragma omp parallel for schedule(static) if (out_w * out_h >= 1 << 14)
  for (int y = 0; y < out_h; ++y) {
    // Half-pixel centers: sample at (x + 0.5) * scale - 0.5.
    const double fy = std::max(0.0, (y + 0.5) * sy - 0.5);
    const int y0 = std::min(img.height - 1, static_cast<int>(fy));
    const int y1 = std::min(img.height - 1, y0 + 1);
    const double wy = fy - y0;
    for (int c = 0; c < 3; ++c) {
      const float* row0 = img.row(c, y0);
      const float* row1 = img.row(c, y1);
      float* orow = out.row(c, y);
      for (int x = 0; x < out_w; ++x) {
        const double fx = std::max(0.0, (x + 0.5) * sx - 0.5);
        const int x0 = std::min(img.width - 1, static_cast<int>(fx));
        const int x1 = std::min(img.width - 1, x0 + 1);
        const double wx = fx - x0;
        const double top = row0[x0] * (1.0 - wx) + row0[x1] * wx;
        const double bot = row1[x0] * (1.0 - wx) + row1[x1] * wx;
        orow[x] = clamp01(static_cast<float>(top * (1.0 - wy) + bot * wy));
      }
    }
  }
  return out;
}

ImageBuffer crop(const ImageBuffer& img, const Rect& rect) {
  if (rect.w <= 0 || rect.h <= 0 || rect.x0 < 0 || rect.y0 < 0 ||
      rect.x0 + rect.w > img.width || rect.y0 + rect.h > img.height) {
    throw std::invalid_argument("crop: rect out of bounds");
  }
  ImageBuffer out(rect.w, rect.h);
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < rect.h; ++y) {
      const float* irow = img.row(c, rect.y0 + y) + rect.x0;
      std::copy(irow, irow + rect.w, out.row(c, y));
    }
  }
  return out;
}

std::pair<ImageBuffer, Rect> random_crop(const ImageBuffer& img, int size,
                                         Rng& rng) {
  if (size <= 0 || size > img.width || size > img.height) {
    throw std::invalid_argument("random_crop: image smaller than crop size");
  }
  const uint64_t max_x = static_cast<uint64_t>(img.width - size);
  const uint64_t max_y = static_cast<uint64_t>(img.height - size);
  Rect rect;
  rect.x0 = static_cast<int>(rng.next_below(max_x + 1));
  rect.y0 = static_cast<int>(rng.next_below(max_y + 1));
  rect.w = size;
  rect.h = size;
  return {crop(img, rect), rect};
}

}  // namespace iqkit
