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

#include "fmireg/focus_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fmireg/error.hpp"

namespace fmireg {

FocusMap::FocusMap(Grid<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::kInput, "empty focus map");
  bool any_positive = false;
  for (double w : weights_.values()) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::kInput, "focus weights must be finite and nonnegative");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(ErrorKind::kEmptyFocus, "focus map is identically zero");
}

FocusMap FocusMap::uniform(int width, int height) {
  return FocusMap(Grid<double>(width, height, 1.0 / (static_cast<double>(width) * height)));
}

double FocusMap::sum() const noexcept {
  return std::accumulate(weights_.values().begin(), weights_.values().end(), 0.0);
}

double FocusMap::max() const noexcept {
  return *std::max_element(weights_.values().begin(), weights_.values().end());
}

FocusMap FocusMap::normalized() const {
  const double s = sum();
  Grid<double> out = weights_;
  for (double& w : out.values()) w /= s;
  return FocusMap(std::move(out));
}

FocusMap mask_multiply(const Grid<double>& weights, const BinaryMask& mask) {
  if (!weights.same_shape(mask)) throw Error(ErrorKind::kInput, "mask and weights differ in shape");
  Grid<double> out(weights.width(), weights.height(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (mask.values()[i]) {
      out.values()[i] = weights.values()[i];
      any = any || out.values()[i] > 0.0;
    }
  }
  if (!any) throw Error(ErrorKind::kEmptyFocus, "mask removes every positive weight");
  return FocusMap(std::move(out));
}

}  // namespace fmireg
