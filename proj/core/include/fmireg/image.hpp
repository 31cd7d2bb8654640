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

#include <cstddef>
#include <span>
#include <vector>

namespace fmireg {

/// Row-major raster of doubles. Pixel (x, y) has its center at real
/// coordinates (x, y); x runs along columns, y down the rows.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{});
  Grid(int width, int height, std::vector<T> values);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  T operator()(int x, int y) const { return values_[index(x, y)]; }
  T& operator()(int x, int y) { return values_[index(x, y)]; }

  std::span<const T> values() const noexcept { return values_; }
  std::span<T> values() noexcept { return values_; }

  template <typename U>
  bool same_shape(const Grid<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> values_;
};

/// Grayscale image with every intensity in [0, 1].
class Image {
 public:
  Image() = default;
  Image(int width, int height, double fill = 0.0);
  /// Throws kInput if a value is outside [0, 1] or the count is wrong.
  Image(int width, int height, std::vector<double> values);
  explicit Image(Grid<double> grid);

  int width() const noexcept { return grid_.width(); }
  int height() const noexcept { return grid_.height(); }
  std::size_t pixel_count() const noexcept { return grid_.size(); }

  double operator()(int x, int y) const { return grid_(x, y); }
  std::span<const double> values() const noexcept { return grid_.values(); }
  const Grid<double>& grid() const noexcept { return grid_; }

  bool same_shape(const Image& other) const noexcept { return grid_.same_shape(other.grid_); }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  Grid<double> grid_;
};

/// Per-pixel boolean flags.
using BinaryMask = Grid<unsigned char>;

}  // namespace fmireg
