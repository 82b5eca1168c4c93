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

#include <utility>

#include "iqkit/image.hpp"
#include "iqkit/rng.hpp"

namespace iqkit {

enum class Interp { kNearest, kBilinear };

// Resize with half-pixel-center alignment. Throws std::invalid_argument
// for non-positive target dimensions. An identity resize returns a
// bit-identical copy for either method.
ImageBuffer resize(const ImageBuffer& img, int out_w, int out_h, Interp method);

// Exact pixel copy of rect. Throws std::invalid_argument when rect falls
// outside the image or has non-positive extents.
ImageBuffer crop(const ImageBuffer& img, const Rect& rect);

// Square crop with offsets drawn uniformly from the valid range. Throws
// std::invalid_argument when the image is smaller than size x size.
std::pair<ImageBuffer, Rect> random_crop(const ImageBuffer& img, int size,
                                         Rng& rng);

}  // namespace iqkit
