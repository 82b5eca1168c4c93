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

#include "iqkit/image_io.hpp"

#include <jpeglib.h>
#include <png.h>

#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

namespace iqkit {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(err->jump, 1);
}

ImageBuffer decode_png(FILE* f, const std::string& path) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: allocation failure reading " + path);
  }
  std::vector<uint8_t> interleaved;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: failed to decode " + path);
  }
  png_init_io(png, f);
  png_read_info(png, info);

  png_set_strip_16(png);
  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  interleaved.resize(static_cast<size_t>(w) * h * 3);
  std::vector<png_bytep> rows(h);
  for (int y = 0; y < h; ++y) {
    rows[y] = interleaved.data() + static_cast<size_t>(y) * w * 3;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return from_rgb8(interleaved.data(), w, h);
}

ImageBuffer decode_jpeg_stream(jpeg_decompress_struct& cinfo) {
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  const int w = static_cast<int>(cinfo.output_width);
  const int h = static_cast<int>(cinfo.output_height);
  std::vector<uint8_t> interleaved(static_cast<size_t>(w) * h * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    uint8_t* row =
        interleaved.data() + static_cast<size_t>(cinfo.output_scanline) * w * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  return from_rgb8(interleaved.data(), w, h);
}

}  // namespace

std::vector<uint8_t> to_rgb8(const ImageBuffer& img) {
  std::vector<uint8_t> out(static_cast<size_t>(img.width) * img.height * 3);
  for (int y = 0; y < img.height; ++y) {
    const float* r = img.row(0, y);
    const float* g = img.row(1, y);
    const float* b = img.row(2, y);
    uint8_t* o = out.data() + static_cast<size_t>(y) * img.width * 3;
    for (int x = 0; x < img.width; ++x) {
      o[3 * x + 0] = static_cast<uint8_t>(
          std::clamp(std::lround(r[x] * 255.0f), 0l, 255l));
      o[3 * x + 1] = static_cast<uint8_t>(
          std::clamp(std::lround(g[x] * 255.0f), 0l, 255l));
      o[3 * x + 2] = static_cast<uint8_t>(
          std::clamp(std::lround(b[x] * 255.0f), 0l, 255l));
    }
  }
  return out;
}

ImageBuffer from_rgb8(const uint8_t* rgb, int width, int height) {
  ImageBuffer img(width, height);
  for (int y = 0; y < height; ++y) {
    const uint8_t* i = rgb + static_cast<size_t>(y) * width * 3;
    float* r = img.row(0, y);
    float* g = img.row(1, y);
    float* b = img.row(2, y);
    for (int x = 0; x < width; ++x) {
      r[x] = i[3 * x + 0] / 255.0f;
      g[x] = i[3 * x + 1] / 255.0f;
      b[x] = i[3 * x + 2] / 255.0f;
    }
  }
  return img;
}

ImageBuffer load_image(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw std::runtime_error("cannot open " + path);
  uint8_t magic[2] = {0, 0};
  if (std::fread(magic, 1, 2, f.get()) != 2) {
    throw std::runtime_error("cannot read " + path);
  }
  std::rewind(f.get());

  if (magic[0] == 0x89 && magic[1] == 'P') {
    return decode_png(f.get(), path);
  }
  if (magic[0] == 0xFF && magic[1] == 0xD8) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    if (setjmp(err.jump)) {
      jpeg_destroy_decompress(&cinfo);
      throw std::runtime_error("jpeg: failed to decode " + path);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f.get());
    ImageBuffer img = decode_jpeg_stream(cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
  }
  throw std::runtime_error("unsupported image format: " + path);
}

void save_png(const ImageBuffer& img, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png: allocation failure writing " + path);
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png: failed to encode " + path);
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::vector<uint8_t> interleaved = to_rgb8(img);
  for (int y = 0; y < img.height; ++y) {
    png_write_row(png, const_cast<uint8_t*>(interleaved.data() +
                                            static_cast<size_t>(y) *
                                                img.width * 3));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::vector<uint8_t> jpeg_encode(const ImageBuffer& img, int quality) {
  jpeg_compress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;
  unsigned char* buf = nullptr;
  unsigned long buf_size = 0;
  if (setjmp(err.jump)) {
    jpeg_destroy_compress(&cinfo);
    std::free(buf);
    throw std::runtime_error("jpeg: encode failed");
  }
  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &buf, &buf_size);
  cinfo.image_width = static_cast<JDIMENSION>(img.width);
  cinfo.image_height = static_cast<JDIMENSION>(img.height);
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, std::clamp(quality, 1, 100), TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  const std::vector<uint8_t> interleaved = to_rgb8(img);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<uint8_t*>(
        interleaved.data() +
        static_cast<size_t>(cinfo.next_scanline) * img.width * 3);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  std::vector<uint8_t> out(buf, buf + buf_size);
  std::free(buf);
  return out;
}

ImageBuffer jpeg_decode(const std::vector<uint8_t>& bytes) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error("jpeg: decode failed");
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), bytes.size());
  ImageBuffer img = decode_jpeg_stream(cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

void save_jpeg(const ImageBuffer& img, const std::string& path, int quality) {
  const std::vector<uint8_t> bytes = jpeg_encode(img, quality);
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  if (std::fwrite(bytes.data(), 1, bytes.size(), f.get()) != bytes.size()) {
    throw std::runtime_error("short write to " + path);
  }
}

}  // namespace iqkit
