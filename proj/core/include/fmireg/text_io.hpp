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

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "fmireg/affine.hpp"
#include "fmireg/bspline.hpp"
#include "fmireg/focus_map.hpp"
#include "fmireg/image_io.hpp"

namespace fmireg {

// Focus map text format:
//   FOCUSMAP <width> <height> sum-normalized
//   <height lines of <width> decimal weights>
// Weights are written with enough digits to round-trip exactly.
void write_focus_map(std::ostream& out, const FocusMap& focus);
void write_focus_map(const std::filesystem::path& path, const FocusMap& focus);
FocusMap read_focus_map(std::istream& in);
FocusMap read_focus_map(const std::filesystem::path& path);

/// 8-bit rendering with the largest weight at 255.
Gray8 focus_to_gray8(const FocusMap& focus);

/// One line "a11 a12 a21 a22 tx ty".
void write_transform_text(std::ostream& out, const AffineTransform& t);
/// JSON object with fields a11, a12, a21, a22, tx, ty.
void write_transform_json(std::ostream& out, const AffineTransform& t);
/// ".json" extension selects the structured form, anything else the record.
void write_transform(const std::filesystem::path& path, const AffineTransform& t);
/// Accepts either form; a leading '{' selects JSON.
AffineTransform read_transform(std::istream& in);
AffineTransform read_transform(const std::filesystem::path& path);

/// "x,y" per line; blank lines and '#' comments are skipped.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points(const std::filesystem::path& path);

/// A JSON document {"curves": [{"name": ..., "points": [[x, y], ...]}, ...]}
/// or, for any other content, a single "x,y" table.
std::vector<SplineCurve> read_curves(const std::filesystem::path& path);

}  // namespace fmireg
