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

#include "iqkit/color.hpp"

#include <cmath>

namespace iqkit {

namespace {

constexpr double kYr = 0.299, kYg = 0.587, kYb = 0.114;

double srgb_to_linear(double c) {
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double linear_to_srgb(double c) {
  return c <= 0.0031308 ? 12.92 * c
                        : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

// CIE 1976 helper, delta = 6/29.
constexpr double kDelta = 6.0 / 29.0;

double lab_f(double t) {
  return t > kDelta * kDelta * kDelta
             ? std::cbrt(t)
             : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

double lab_f_inv(double t) {
  return t > kDelta ? t * t * t : 3.0 * kDelta * kDelta * (t - 4.0 / 29.0);
}

// D65 white point of the sRGB matrix below.
constexpr double kXn = 0.95047, kYn = 1.0, kZn = 1.08883;

}  // namespace

ImageBuffer rgb_to_ycbcr(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 14)
  for (int y = 0; y < h; ++y) {
    const float* r = img.row(0, y);
    const float* g = img.row(1, y);
    const float* b = img.row(2, y);
    float* oy = out.row(0, y);
    float* ocb = out.row(1, y);
    float* ocr = out.row(2, y);
    for (int x = 0; x < w; ++x) {
      const double luma = kYr * r[x] + kYg * g[x] + kYb * b[x];
      oy[x] = clamp01(static_cast<float>(luma));
      ocb[x] = clamp01(static_cast<float>(0.5 + (b[x] - luma) / 1.772));
      ocr[x] = clamp01(static_cast<float>(0.5 + (r[x] - luma) / 1.402));
    }
  }
  return out;
}

ImageBuffer ycbcr_to_rgb(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 14)
  for (int y = 0; y < h; ++y) {
    const float* iy = img.row(0, y);
    const float* icb = img.row(1, y);
    const float* icr = img.row(2, y);
    float* r = out.row(0, y);
    float* g = out.row(1, y);
    float* b = out.row(2, y);
    for (int x = 0; x < w; ++x) {
      const double rr = iy[x] + 1.402 * (icr[x] - 0.5);
      const double bb = iy[x] + 1.772 * (icb[x] - 0.5);
      const double gg = (iy[x] - kYr * rr - kYb * bb) / kYg;
      r[x] = clamp01(static_cast<float>(rr));
      g[x] = clamp01(static_cast<float>(gg));
      b[x] = clamp01(static_cast<float>(bb));
    }
  }
  return out;
}

ImageBuffer rgb_to_hsv(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 14)
  for (int y = 0; y < h; ++y) {
    const float* r = img.row(0, y);
    const float* g = img.row(1, y);
    const float* b = img.row(2, y);
    float* oh = out.row(0, y);
    float* os = out.row(1, y);
    float* ov = out.row(2, y);
    for (int x = 0; x < w; ++x) {
      const double maxc = std::max({r[x], g[x], b[x]});
      const double minc = std::min({r[x], g[x], b[x]});
      const double delta = maxc - minc;
      double hue = 0.0;
      if (delta > 0.0) {
        if (maxc == r[x]) {
          hue = std::fmod((g[x] - b[x]) / delta, 6.0);
        } else if (maxc == g[x]) {
          hue = (b[x] - r[x]) / delta + 2.0;
        } else {
          hue = (r[x] - g[x]) / delta + 4.0;
        }
        hue /= 6.0;
        if (hue < 0.0) hue += 1.0;
      }
      oh[x] = static_cast<float>(hue);
      os[x] = maxc > 0.0 ? static_cast<float>(delta / maxc) : 0.0f;
      ov[x] = static_cast<float>(maxc);
    }
  }
  return out;
}

ImageBuffer hsv_to_rgb(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 14)
  for (int y = 0; y < h; ++y) {
    const float* ih = img.row(0, y);
    const float* is = img.row(1, y);
    const float* iv = img.row(2, y);
    float* r = out.row(0, y);
    float* g = out.row(1, y);
    float* b = out.row(2, y);
    for (int x = 0; x < w; ++x) {
      const double hue6 = ih[x] * 6.0;
      const double s = is[x];
      const double v = iv[x];
      const int sector = static_cast<int>(std::floor(hue6)) % 6;
      const double f = hue6 - std::floor(hue6);
      const double p = v * (1.0 - s);
      const double q = v * (1.0 - s * f);
      const double t = v * (1.0 - s * (1.0 - f));
      double rr, gg, bb;
      switch (sector < 0 ? sector + 6 : sector) {
        case 0: rr = v; gg = t; bb = p; break;
        case 1: rr = q; gg = v; bb = p; break;
        case 2: rr = p; gg = v; bb = t; break;
        case 3: rr = p; gg = q; bb = v; break;
        case 4: rr = t; gg = p; bb = v; break;
        default: rr = v; gg = p; bb = q; break;
      }
      r[x] = clamp01(static_cast<float>(rr));
      g[x] = clamp01(static_cast<float>(gg));
      b[x] = clamp01(static_cast<float>(bb));
    }
  }
  return out;
}

ImageBuffer rgb_to_lab(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 13)
  for (int y = 0; y < h; ++y) {
    const float* r = img.row(0, y);
    const float* g = img.row(1, y);
    const float* b = img.row(2, y);
    float* ol = out.row(0, y);
    float* oa = out.row(1, y);
    float* ob = out.row(2, y);
    for (int x = 0; x < w; ++x) {
      const double rl = srgb_to_linear(r[x]);
      const double gl = srgb_to_linear(g[x]);
      const double bl = srgb_to_linear(b[x]);
      const double X = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
      const double Y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
      const double Z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;
      const double fx = lab_f(X / kXn);
      const double fy = lab_f(Y / kYn);
      const double fz = lab_f(Z / kZn);
      ol[x] = static_cast<float>(116.0 * fy - 16.0);
      oa[x] = static_cast<float>(500.0 * (fx - fy));
      ob[x] = static_cast<float>(200.0 * (fy - fz));
    }
  }
  return out;
}

ImageBuffer lab_to_rgb(const ImageBuffer& img) {
  ImageBuffer out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 13)
  for (int y = 0; y < h; ++y) {
    const float* il = img.row(0, y);
    const float* ia = img.row(1, y);
    const float* ib = img.row(2, y);
    float* r = out.row(0, y);
    float* g = out.row(1, y);
    float* b = out.row(2, y);
    for (int x = 0; x < w; ++x) {
      const double fy = (il[x] + 16.0) / 116.0;
      const double fx = fy + ia[x] / 500.0;
      const double fz = fy - ib[x] / 200.0;
      const double X = kXn * lab_f_inv(fx);
      const double Y = kYn * lab_f_inv(fy);
      const double Z = kZn * lab_f_inv(fz);
      const double rl = 3.2404542 * X - 1.5371385 * Y - 0.4985314 * Z;
      const double gl = -0.9692660 * X + 1.8760108 * Y + 0.0415560 * Z;
      const double bl = 0.0556434 * X - 0.2040259 * Y + 1.0572252 * Z;
      r[x] = clamp01(static_cast<float>(linear_to_srgb(std::max(0.0, rl))));
      g[x] = clamp01(static_cast<float>(linear_to_srgb(std::max(0.0, gl))));
      b[x] = clamp01(static_cast<float>(linear_to_srgb(std::max(0.0, bl))));
    }
  }
  return out;
}

Plane luma(const ImageBuffer& img) {
  Plane out(img.width, img.height);
  const int h = img.height, w = img.width;
#pragma omp parallel for schedule(static) if (h * w >= 1 << 14)
  for (int y = 0; y < h; ++y) {
    const float* r = img.row(0, y);
    const float* g = img.row(1, y);
    const float* b = img.row(2, y);
    float* o = out.row(y);
    for (int x = 0; x < w; ++x) {
      o[x] = static_cast<float>(kYr * r[x] + kYg * g[x] + kYb * b[x]);
    }
  }
  return out;
}

}  // namespace iqkit
