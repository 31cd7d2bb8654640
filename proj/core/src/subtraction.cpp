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

#include "fmireg/subtraction.hpp"

#include <algorithm>
#include <cmath>

#include "fmireg/error.hpp"
#include "fmireg/sampling.hpp"

namespace fmireg {

std::size_t SubtractionImage::valid_count() const noexcept {
  return static_cast<std::size_t>(std::count(valid.values().begin(), valid.values().end(), 1));
}

SubtractionImage subtract(const Image& reference, const Image& test, const AffineTransform& t) {
  SubtractionImage out{Grid<double>(test.width(), test.height(), 0.0),
                       BinaryMask(test.width(), test.height(), 0)};
  std::size_t inside = 0;
  for (int y = 0; y < test.height(); ++y) {
    for (int x = 0; x < test.width(); ++x) {
      const Point p = t.apply(x, y);
      if (const auto sample = bilinear_sample(reference, p.x, p.y)) {
        out.values(x, y) = *sample - test(x, y);
        out.valid(x, y) = 1;
        ++inside;
      }
    }
  }
  if (inside == 0) throw Error(ErrorKind::kEmptyOverlap, "transform maps no test pixel inside reference");
  return out;
}

Grid<std::uint8_t> encode_subtraction(const SubtractionImage& s) {
  Grid<std::uint8_t> out(s.width(), s.height(), 0);
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) {
      if (!s.valid(x, y)) continue;
      const long b = std::lround(128.0 + 128.0 * s.values(x, y));
      out(x, y) = static_cast<std::uint8_t>(std::clamp(b, 0L, 255L));
    }
  }
  return out;
}

}  // namespace fmireg
