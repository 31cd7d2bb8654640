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

#include <cstdint>

#include "fmireg/affine.hpp"
#include "fmireg/image.hpp"

namespace fmireg {

/// Signed difference (transformed reference minus test) on the test grid.
/// `valid` is set exactly where the mapped reference sample exists.
struct SubtractionImage {
  Grid<double> values;
  BinaryMask valid;

  int width() const noexcept { return values.width(); }
  int height() const noexcept { return values.height(); }
  std::size_t valid_count() const noexcept;
};

/// Throws kEmptyOverlap when no test pixel maps inside the reference.
SubtractionImage subtract(const Image& reference, const Image& test, const AffineTransform& t);

/// 8-bit rendering: 0 -> 128, d -> clamp(round(128 + 128 d), 0, 255),
/// pixels outside the overlap -> 0.
Grid<std::uint8_t> encode_subtraction(const SubtractionImage& s);

}  // namespace fmireg
