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

#pragma once

#include <optional>

#include "fmireg/image.hpp"

namespace fmireg {

/// Bilinear interpolation of the four pixels surrounding (x, y).
/// Coordinates outside the closed hull of pixel centers,
/// [0, width-1] x [0, height-1], yield std::nullopt; there is no
/// extrapolation or border extension.
inline std::optional<double> bilinear_sample(const Grid<double>& grid, double x,
                                             double y) noexcept {
  const int w = grid.width();
  const int h = grid.height();
  if (!(x >= 0.0 && y >= 0.0 && x <= w - 1 && y <= h - 1)) return std::nullopt;

  int x0 = static_cast<int>(x);
  int y0 = static_cast<int>(y);
  if (x0 > w - 2) x0 = w > 1 ? w - 2 : 0;
  if (y0 > h - 2) y0 = h > 1 ? h - 2 : 0;
  const int x1 = w > 1 ? x0 + 1 : x0;
  const int y1 = h > 1 ? y0 + 1 : y0;

  const double fx = x - x0;
  const double fy = y - y0;
  const double top = grid(x0, y0) * (1.0 - fx) + grid(x1, y0) * fx;
  const double bottom = grid(x0, y1) * (1.0 - fx) + grid(x1, y1) * fx;
  return top * (1.0 - fy) + bottom * fy;
}

inline std::optional<double> bilinear_sample(const Image& img, double x, double y) noexcept {
  return bilinear_sample(img.grid(), x, y);
}

}  // namespace fmireg
