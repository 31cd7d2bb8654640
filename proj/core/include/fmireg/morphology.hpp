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

#include <utility>
#include <vector>

#include "fmireg/binning.hpp"
#include "fmireg/image.hpp"

namespace fmireg {

/// flag = (value >= t). Throws kDomain for t outside [0, 1].
BinaryMask threshold_mask(const Image& img, double t);

/// Otsu's threshold over a K-bin histogram: maximizes between-class variance,
/// ties resolved toward the lower threshold. The returned value is the lower
/// edge of the first bin in the upper class, so threshold_mask selects that
/// class. Throws kNoThreshold if fewer than two bins are occupied.
double otsu_threshold(const Image& img, const BinningScheme& scheme = BinningScheme{});

/// Offsets (dx, dy) with dx^2 + dy^2 <= r^2.
std::vector<std::pair<int, int>> disk_offsets(int radius);

/// Dilation by a disk; pixels outside the image count as false.
BinaryMask morph_dilate(const BinaryMask& mask, int radius);
/// Erosion by a disk; pixels outside the image count as false.
BinaryMask morph_erode(const BinaryMask& mask, int radius);
/// erode(dilate(mask)) computed on the mask padded by `radius` false pixels
/// on every side, then cropped. Dilated pixels beyond the border are kept
/// until the erosion, so an object near the border is not glued to it.
BinaryMask morph_close(const BinaryMask& mask, int radius);

BinaryMask complement(const BinaryMask& mask);

}  // namespace fmireg
