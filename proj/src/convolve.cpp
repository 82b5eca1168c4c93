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

#include "iqkit/convolve.hpp"

#include <cmath>
#include <stdexcept>

namespace iqkit {

namespace {

// reflect-101: ... c b | a b c | b a ... (edge sample not repeated).
int reflect101(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * n - 2 - i;
  }
  return i;
}

void check_kernel(const Kernel2d& k) {
  if (k.width <= 0 || k.height <= 0 || k.width % 2 == 0 ||
      k.height % 2 == 0) {
    throw std::invalid_argument("convolve2d: kernel dimensions must be odd");
  }
  if (k.weights.size() != static_cast<size_t>(k.width) * k.height) {
    throw std::invalid_argument("convolve2d: kernel size mismatch");
  }
}

}  // namespace

Plane convolve_plane(const Plane& p, const Kernel2d& kernel) {
  check_kernel(kernel);
  const int w = p.width, h = p.height;
  const int rx = kernel.width / 2, ry = kernel.height / 2;
  Plane out(w, h);
#pragma omp parallel for schedule(static) if (h * w >= 1 << 12)
  for (int y = 0; y < h; ++y) {
    float* orow = out.row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int ky = -ry; ky <= ry; ++ky) {
        const float* irow = p.row(reflect101(y - ky, h));
        const float* krow =
            kernel.weights.data() +
            static_cast<size_t>(ky + ry) * kernel.width;
        for (int kx = -rx; kx <= rx; ++kx) {
          acc += krow[kx + rx] * irow[reflect101(x - kx, w)];
        }
      }
      orow[x] = static_cast<float>(acc);
    }
  }
  return out;
}

ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2d& kernel) {
  check_kernel(kernel);
  ImageBuffer out(img.width, img.height);
  for (int c = 0; c < 3; ++c) {
    set_image_plane(out, c, convolve_plane(image_plane(img, c), kernel));
  }
  clamp_image(out);
  return out;
}

Plane convolve_separable(const Plane& p, const std::vector<float>& taps) {
  if (taps.empty() || taps.size() % 2 == 0) {
    throw std::invalid_argument("convolve_separable: taps must be odd-sized");
  }
  const int w = p.width, h = p.height;
  const int r = static_cast<int>(taps.size()) / 2;
  Plane tmp(w, h);
#pragma omp parallel for schedule(static) if (h * w >= 1 << 12)
  for (int y = 0; y < h; ++y) {
    const float* irow = p.row(y);
    float* trow = tmp.row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -r; k <= r; ++k) {
        acc += taps[k + r] * irow[reflect101(x - k, w)];
      }
      trow[x] = static_cast<float>(acc);
    }
  }
  Plane out(w, h);
#pragma omp parallel for schedule(static) if (h * w >= 1 << 12)
  for (int y = 0; y < h; ++y) {
    float* orow = out.row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int k = -r; k <= r; ++k) {
        acc += taps[k + r] * tmp.at(reflect101(y - k, h), x);
      }
      orow[x] = static_cast<float>(acc);
    }
  }
  return out;
}

std::vector<float> gaussian_taps(double sigma) {
  if (sigma <= 0.0) {
    throw std::invalid_argument("gaussian_taps: sigma must be positive");
  }
  const int r = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> raw(2 * r + 1);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    raw[i + r] = std::exp(-(static_cast<double>(i) * i) /
                          (2.0 * sigma * sigma));
    sum += raw[i + r];
  }
  std::vector<float> taps(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    taps[i] = static_cast<float>(raw[i] / sum);
  }
  return taps;
}

ImageBuffer gaussian_blur_rgb(const ImageBuffer& img, double sigma) {
  const std::vector<float> taps = gaussian_taps(sigma);
  ImageBuffer out(img.width, img.height);
  for (int c = 0; c < 3; ++c) {
    set_image_plane(out, c, convolve_separable(image_plane(img, c), taps));
  }
  clamp_image(out);
  return out;
}

Plane image_plane(const ImageBuffer& img, int c) {
  Plane p(img.width, img.height);
  std::copy(img.plane(c), img.plane(c) + img.plane_size(), p.data.begin());
  return p;
}

void set_image_plane(ImageBuffer& img, int c, const Plane& p) {
  std::copy(p.data.begin(), p.data.end(), img.plane(c));
}

}  // namespace iqkit
