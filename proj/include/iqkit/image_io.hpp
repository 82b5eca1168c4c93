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

#include <cstdint>
#include <string>
#include <vector>

#include "iqkit/image.hpp"

namespace iqkit {

// Decodes a PNG or JPEG file (sniffed by magic bytes) into a unit-range
// RGB buffer; 8-bit samples are mapped via v/255. Grayscale and alpha
// inputs are expanded/stripped to RGB. Throws std::runtime_error on
// unreadable or unsupported files.
ImageBuffer load_image(const std::string& path);

// 8-bit RGB encode with round(v*255) clamped. Throws on I/O failure.
void save_png(const ImageBuffer& img, const std::string& path);
void save_jpeg(const ImageBuffer& img, const std::string& path, int quality);

// In-memory JPEG round trip, shared by the compression distortion.
std::vector<uint8_t> jpeg_encode(const ImageBuffer& img, int quality);
ImageBuffer jpeg_decode(const std::vector<uint8_t>& bytes);

// Quantizes a unit-range buffer to interleaved 8-bit RGB and back.
std::vector<uint8_t> to_rgb8(const ImageBuffer& img);
ImageBuffer from_rgb8(const uint8_t* rgb, int width, int height);

}  // namespace iqkit
