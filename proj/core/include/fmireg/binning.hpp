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

namespace fmireg {

inline constexpr int kDefaultBins = 64;

/// Uniform partition of [0, 1] into K half-open bins; 1.0 falls in the last.
/// Bin indices are 1-based, matching the usual {1, ..., K} labelling.
class BinningScheme {
 public:
  explicit BinningScheme(int bins = kDefaultBins);

  int bins() const noexcept { return bins_; }

  /// Throws kDomain for x outside [0, 1] (or NaN).
  int bin(double x) const;

  /// Zero-based bin for a value already known to be in [0, 1]. Values a few
  /// ulps outside, produced by interpolation, are clamped.
  int bin0_unchecked(double x) const noexcept {
    int k = static_cast<int>(x * bins_);
    if (k < 0) k = 0;
    if (k >= bins_) k = bins_ - 1;
    return k;
  }

 private:
  int bins_;
};

}  // namespace fmireg
