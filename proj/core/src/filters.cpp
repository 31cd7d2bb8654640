// Copyright 2026 The fmireg Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmireg/filters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

namespace {

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

Image to_unit_image(Grid<double> g) {
  for (double& v : g.values()) v = std::clamp(v, 0.0, 1.0);
  return Image(std::move(g));
}

}  // namespace

Image median_filter(const Image& img, int radius) {
  if (radius < 1) throw Error(ErrorKind::kInput, "median radius must be >= 1");
  const int w = img.width();
  const int h = img.height();
  Grid<double> out(w, h);
  std::vector<double> window;
  window.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      window.clear();
      for (int yy = std::max(0, y - radius); yy <= std::min(h - 1, y + radius); ++yy) {
        for (int xx = std::max(0, x - radius); xx <= std::min(w - 1, x + radius); ++xx) {
          window.push_back(img(xx, yy));
        }
      }
      const std::size_t mid = window.size() / 2;
      std::nth_element(window.begin(), window.begin() + mid, window.end());
      double m = window[mid];
      if (window.size() % 2 == 0) {
        const double lower = *std::max_element(window.begin(), window.begin() + mid);
        m = 0.5 * (lower + m);
      }
      out(x, y) = m;
    }
  }
  return Image(std::move(out));
}

Image gradient_modulus(const Image& img) {
  const int w = img.width();
  const int h = img.height();
  if (w < 3 || h < 3) {
    throw Error(ErrorKind::kTooSmall, "gradient needs at least 3x3 pixels, got " +
                                          std::to_string(w) + "x" + std::to_string(h));
  }
  static const double kScale = 1.0 / (4.0 * std::sqrt(2.0));
  Grid<double> out(w, h);
  for (int y = 0; y < h; ++y) {
    const int ym = clamp_index(y - 1, h);
    const int yp = clamp_index(y + 1, h);
    for (int x = 0; x < w; ++x) {
      const int xm = clamp_index(x - 1, w);
      const int xp = clamp_index(x + 1, w);
      const double gx = (img(xp, ym) + 2.0 * img(xp, y) + img(xp, yp)) -
                        (img(xm, ym) + 2.0 * img(xm, y) + img(xm, yp));
      const double gy = (img(xm, yp) + 2.0 * img(x, yp) + img(xp, yp)) -
                        (img(xm, ym) + 2.0 * img(x, ym) + img(xp, ym));
      out(x, y) = std::sqrt(gx * gx + gy * gy) * kScale;
    }
  }
  return to_unit_image(std::move(out));
}

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::kInput, "gaussian sigma must be positive");
  }
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    sum += k[i + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

Grid<double> gaussian_convolve(const Grid<double>& g, double sigma) {
  const std::vector<double> k = gaussian_kernel(sigma);
  const int r = static_cast<int>(k.size() / 2);
  const int w = g.width();
  const int h = g.height();

  Grid<double> rows(w, h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -r; i <= r; ++i) acc += k[i + r] * g(clamp_index(x + i, w), y);
      rows(x, y) = acc;
    }
  }
  Grid<double> out(w, h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -r; i <= r; ++i) acc += k[i + r] * rows(x, clamp_index(y + i, h));
      out(x, y) = acc;
    }
  }
  return out;
}

Image gaussian_convolve(const Image& img, double sigma) {
  return to_unit_image(gaussian_convolve(img.grid(), sigma));
}

}  // namespace fmireg
