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

#include "fmireg/image.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

template <typename T>
Grid<T>::Grid(int width, int height, T fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorKind::kInput, "grid dimensions must be positive, got " +
                                       std::to_string(width) + "x" + std::to_string(height));
  }
  values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

template <typename T>
Grid<T>::Grid(int width, int height, std::vector<T> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width < 1 || height < 1) {
    throw Error(ErrorKind::kInput, "grid dimensions must be positive");
  }
  if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorKind::kInput, "grid value count does not match " + std::to_string(width) +
                                       "x" + std::to_string(height));
  }
}

template class Grid<double>;
template class Grid<unsigned char>;

namespace {

void check_intensities(const Grid<double>& g) {
  for (double v : g.values()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorKind::kInput, "image intensity outside [0,1]: " + std::to_string(v));
    }
  }
}

}  // namespace

Image::Image(int width, int height, double fill) : grid_(width, height, fill) {
  check_intensities(grid_);
}

Image::Image(int width, int height, std::vector<double> values)
    : grid_(width, height, std::move(values)) {
  check_intensities(grid_);
}

Image::Image(Grid<double> grid) : grid_(std::move(grid)) {
  if (grid_.empty()) throw Error(ErrorKind::kInput, "empty image");
  check_intensities(grid_);
}

}  // namespace fmireg
