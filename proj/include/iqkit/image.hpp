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

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <vector>

namespace iqkit {

// Three-channel planar image. RGB buffers hold values in [0, 1]; every
// public operation clamps back into that range on return. Buffers produced
// by the color-space transforms (YCbCr, HSV, LAB) carry native component
// ranges instead and are only meaningful as inputs to the matching inverse
// transform or to per-channel operations.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // 3 planes of height*width floats, row-major

  ImageBuffer() = default;
  ImageBuffer(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<size_t>(3) * w * h, fill) {}

  size_t plane_size() const { return static_cast<size_t>(width) * height; }

  float* plane(int c) { return data.data() + c * plane_size(); }
  const float* plane(int c) const { return data.data() + c * plane_size(); }

  float* row(int c, int y) { return plane(c) + static_cast<size_t>(y) * width; }
  const float* row(int c, int y) const {
    return plane(c) + static_cast<size_t>(y) * width;
  }

  float& at(int c, int y, int x) { return row(c, y)[x]; }
  float at(int c, int y, int x) const { return row(c, y)[x]; }

  bool same_dims(const ImageBuffer& other) const {
    return width == other.width && height == other.height;
  }

  bool valid() const {
    return width > 0 && height > 0 && data.size() == 3 * plane_size();
  }
};

struct Rect {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;
};

inline float clamp01(float v) { return std::clamp(v, 0.0f, 1.0f); }

// Clamps every channel value into [0, 1] in place.
void clamp_image(ImageBuffer& img);

// Single-plane working buffer for intermediate per-channel math.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  Plane() = default;
  Plane(int w, int h, float fill = 0.0f)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  float* row(int y) { return data.data() + static_cast<size_t>(y) * width; }
  const float* row(int y) const {
    return data.data() + static_cast<size_t>(y) * width;
  }
  float& at(int y, int x) { return row(y)[x]; }
  float at(int y, int x) const { return row(y)[x]; }
};

}  // namespace iqkit
