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

#include <vector>

#include "iqkit/image.hpp"

namespace iqkit {

// Dense row-major convolution kernel. Both dimensions must be odd.
struct Kernel2d {
  int width = 0;
  int height = 0;
  std::vector<float> weights;

  float at(int ky, int kx) const {
    return weights[static_cast<size_t>(ky) * width + kx];
  }
};

// True 2-D convolution (kernel flipped) per channel with reflect-101
// borders. Output dimensions equal the input's; the result is clamped
// into [0, 1]. Throws std::invalid_argument for even kernel dimensions.
ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2d& kernel);

// Unclamped single-plane convolution, shared by the distortion kernels
// that operate in native-range color spaces.
Plane convolve_plane(const Plane& p, const Kernel2d& kernel);

// Separable convolution with the same 1-D taps applied horizontally then
// vertically. Unclamped; used for Gaussian blurs.
Plane convolve_separable(const Plane& p, const std::vector<float>& taps);

// Normalized Gaussian taps with radius ceil(3*sigma).
std::vector<float> gaussian_taps(double sigma);

// Gaussian blur of all three channels, clamped on return.
ImageBuffer gaussian_blur_rgb(const ImageBuffer& img, double sigma);

Plane image_plane(const ImageBuffer& img, int c);
void set_image_plane(ImageBuffer& img, int c, const Plane& p);

}  // namespace iqkit
