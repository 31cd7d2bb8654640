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

#include "fmireg/morphology.hpp"

#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

BinaryMask threshold_mask(const Image& img, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::kDomain, "threshold outside [0,1]");
  BinaryMask out(img.width(), img.height(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] = img.values()[i] >= t ? 1 : 0;
  return out;
}

double otsu_threshold(const Image& img, const BinningScheme& scheme) {
  const int bins = scheme.bins();
  std::vector<double> count(bins, 0.0);
  for (double v : img.values()) count[scheme.bin0_unchecked(v)] += 1.0;

  int occupied = 0;
  double total = 0.0, weighted = 0.0;
  for (int k = 0; k < bins; ++k) {
    occupied += count[k] > 0.0;
    total += count[k];
    weighted += k * count[k];
  }
  if (occupied < 2) throw Error(ErrorKind::kNoThreshold, "image occupies a single gray bin");

  int best_k = -1;
  double best_var = -1.0;
  double w0 = 0.0, s0 = 0.0;
  for (int k = 0; k + 1 < bins; ++k) {
    w0 += count[k];
    s0 += k * count[k];
    const double w1 = total - w0;
    if (w0 == 0.0 || w1 == 0.0) continue;
    const double mu0 = s0 / w0;
    const double mu1 = (weighted - s0) / w1;
    const double between = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (between > best_var) {
      best_var = between;
      best_k = k;
    }
  }
  return static_cast<double>(best_k + 1) / bins;
}

std::vector<std::pair<int, int>> disk_offsets(int radius) {
  if (radius < 1) throw Error(ErrorKind::kInput, "structuring element radius must be >= 1");
  std::vector<std::pair<int, int>> out;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= radius * radius) out.emplace_back(dx, dy);
    }
  }
  return out;
}

BinaryMask morph_dilate(const BinaryMask& mask, int radius) {
  const auto disk = disk_offsets(radius);
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      for (auto [dx, dy] : disk) {
        const int xx = x + dx;
        const int yy = y + dy;
        if (xx >= 0 && yy >= 0 && xx < w && yy < h) out(xx, yy) = 1;
      }
    }
  }
  return out;
}

BinaryMask morph_erode(const BinaryMask& mask, int radius) {
  const auto disk = disk_offsets(radius);
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      bool keep = true;
      for (auto [dx, dy] : disk) {
        const int xx = x + dx;
        const int yy = y + dy;
        if (xx < 0 || yy < 0 || xx >= w || yy >= h || !mask(xx, yy)) {
          keep = false;
          break;
        }
      }
      out(x, y) = keep ? 1 : 0;
    }
  }
  return out;
}

BinaryMask morph_close(const BinaryMask& mask, int radius) {
  if (radius < 1) throw Error(ErrorKind::kInput, "structuring element radius must be >= 1");
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask padded(w + 2 * radius, h + 2 * radius, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) padded(x + radius, y + radius) = mask(x, y);
  }
  const BinaryMask closed = morph_erode(morph_dilate(padded, radius), radius);
  BinaryMask out(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) out(x, y) = closed(x + radius, y + radius);
  }
  return out;
}

BinaryMask complement(const BinaryMask& mask) {
  BinaryMask out = mask;
  for (auto& f : out.values()) f = f ? 0 : 1;
  return out;
}

}  // namespace fmireg
