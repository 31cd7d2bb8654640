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

#include "fmireg/image.hpp"

namespace fmireg {

/// Nonnegative weight field over the reference image domain. At least one
/// weight is positive. The weights need not sum to 1; `normalized()` gives
/// the probability distribution.
class FocusMap {
 public:
  /// Throws kInput for negative or non-finite weights and kEmptyFocus when
  /// every weight is zero.
  explicit FocusMap(Grid<double> weights);

  /// Constant focus over a width x height domain.
  static FocusMap uniform(int width, int height);

  int width() const noexcept { return weights_.width(); }
  int height() const noexcept { return weights_.height(); }
  double operator()(int x, int y) const { return weights_(x, y); }
  const Grid<double>& weights() const noexcept { return weights_; }

  double sum() const noexcept;
  double max() const noexcept;
  /// Weights divided by their sum.
  FocusMap normalized() const;

  friend bool operator==(const FocusMap&, const FocusMap&) = default;

 private:
  Grid<double> weights_;
};

/// Pointwise product; weights where the mask is false become exactly 0.
/// Throws kInput on a shape mismatch and kEmptyFocus if nothing survives.
FocusMap mask_multiply(const Grid<double>& weights, const BinaryMask& mask);
inline FocusMap mask_multiply(const FocusMap& focus, const BinaryMask& mask) {
  return mask_multiply(focus.weights(), mask);
}
inline FocusMap mask_multiply(const Image& img, const BinaryMask& mask) {
  return mask_multiply(img.grid(), mask);
}

}  // namespace fmireg
