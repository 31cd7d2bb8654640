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
#include <filesystem>

#include "fmireg/image.hpp"

namespace fmireg {

using Gray8 = Grid<std::uint8_t>;

/// Rasters above this pixel count are rejected on read.
inline constexpr std::size_t kMaxPixels = 16u * 1024u * 1024u;

/// Byte b maps to intensity b / 255.
Image to_image(const Gray8& raster);
/// Intensity v maps to round(255 v).
Gray8 to_gray8(const Image& img);

/// Reads binary PGM (P5, maxval 255) or 8-bit grayscale PNG, detected by
/// magic bytes. Throws kInput on malformed or oversized files.
Gray8 read_gray8(const std::filesystem::path& path);
Image read_image(const std::filesystem::path& path);

void write_pgm(const std::filesystem::path& path, const Gray8& raster);
void write_png(const std::filesystem::path& path, const Gray8& raster);
/// Picks PNG for a ".png" extension and PGM otherwise.
void write_gray8(const std::filesystem::path& path, const Gray8& raster);

}  // namespace fmireg
