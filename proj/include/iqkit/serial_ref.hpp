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

#include "iqkit/convolve.hpp"
#include "iqkit/image.hpp"

// Straight-line serial implementations of the hot kernels. They are the
// ground truth the parallel versions are tested against and the baseline
// the benchmark compares with; keep them free of OpenMP and of any code
// shared with the main implementations.
namespace iqkit::ref {

ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2d& kernel);
ImageBuffer resize_bilinear(const ImageBuffer& img, int out_w, int out_h);
ImageBuffer rgb_to_ycbcr(const ImageBuffer& img);
double mse(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace iqkit::ref
