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

#include "iqkit/image.hpp"

namespace iqkit {

// ITU-R BT.601 full-range YCbCr. Planes: Y, Cb, Cr, all in [0, 1] with
// neutral chroma at 0.5.
ImageBuffer rgb_to_ycbcr(const ImageBuffer& img);
ImageBuffer ycbcr_to_rgb(const ImageBuffer& img);

// HSV with hue stored as a fraction of a turn in [0, 1). Planes: H, S, V.
ImageBuffer rgb_to_hsv(const ImageBuffer& img);
ImageBuffer hsv_to_rgb(const ImageBuffer& img);

// CIE 1976 L*a*b* with D65 white point, sRGB primaries and transfer
// function. Planes carry native ranges (L in [0, 100], a/b roughly
// [-128, 127]); lab_to_rgb clamps on return.
ImageBuffer rgb_to_lab(const ImageBuffer& img);
ImageBuffer lab_to_rgb(const ImageBuffer& img);

// BT.601 luma of an RGB buffer.
Plane luma(const ImageBuffer& img);

}  // namespace iqkit
