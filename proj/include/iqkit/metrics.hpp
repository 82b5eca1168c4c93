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

// Mean squared error over all three channels. Throws std::invalid_argument
// on dimension mismatch.
double mse(const ImageBuffer& a, const ImageBuffer& b);

// 10*log10(1/MSE) in dB for unit-range images; +infinity for identical
// inputs.
double psnr(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace iqkit
