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

#include "iqkit/serial_ref.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace iqkit::ref {

namespace {

int reflect101(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
  }
  return i;
}

}  // namespace

ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2d& kernel) {
  if (kernel.width % 2 == 0 || kernel.height % 2 == 0) {
    throw std::invalid_argument("ref::convolve2d: kernel must be odd-sized");
  }
  const int rx = kernel.width / 2, ry = kernel.height / 2;
  ImageBuffer out(img.width, img.height);
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        double acc = 0.0;
        for (int ky = -ry; ky <= ry; ++ky) {
          for (int kx = -rx; kx <= rx; ++kx) {
            acc += kernel.at(ky + ry, kx + rx) *
                   img.at(c, reflect101(y - ky, img.height),
                          reflect101(x - kx, img.width));
          }
        }
        out.at(c, y, x) = clamp01(static_cast<float>(acc));
      }
    }
  }
  return out;
}

ImageBuffer resize_bilinear(const ImageBuffer& img, int out_w, int out_h) {
  ImageBuffer out(out_w, out_h);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < out_h; ++y) {
      const double fy = std::max(0.0, (y + 0.5) * sy - 0.5);
      const int y0 = std::min(img.height - 1, static_cast<int>(fy));
      const int y1 = std::min(img.height - 1, y0 + 1);
      const double wy = fy - y0;
      for (int x = 0; x < out_w; ++x) {
        const double fx = std::max(0.0, (x + 0.5) * sx - 0.5);
        const int x0 = std::min(img.width - 1, static_cast<int>(fx));
        const int x1 = std::min(img.width - 1, x0 + 1);
        const double wx = fx - x0;
        const double top =
            img.at(c, y0, x0) * (1.0 - wx) + img.at(c, y0, x1) * wx;
        const double bot =
            img.at(c, y1, x0) * (1.0 - wx) + img.at(c, y1, x1) * wx;
        out.at(c, y, x) =
            clamp01(static_cast<float>(top * (1.0 - wy) + bot * wy));
      }
    }
  }
  return out;
}

ImageBuffer rgb_to_ycbcr(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double r = img.at(0, y, x);
      const double g = img.at(1, y, x);
      const double b = img.at(2, y, x);
      const double luma = 0.299 * r + 0.587 * g + 0.114 * b;
      out.at(0, y, x) = clamp01(static_cast<float>(luma));
      out.at(1, y, x) = clamp01(static_cast<float>(0.5 + (b - luma) / 1.772));
      out.at(2, y, x) = clamp01(static_cast<float>(0.5 + (r - luma) / 1.402));
    }
  }
  return out;
}

double mse(const ImageBuffer& a, const ImageBuffer& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) {
    const double d = static_cast<double>(a.data[i]) - b.data[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.data.size());
}

}  // namespace iqkit::ref
