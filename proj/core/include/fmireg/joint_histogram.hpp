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
#include <iosfwd>
#include <span>
#include <vector>

#include "fmireg/affine.hpp"
#include "fmireg/binning.hpp"
#include "fmireg/focus_map.hpp"
#include "fmireg/image.hpp"

namespace fmireg {

/// K x K grid of (weighted) gray-pair masses. Rows index reference bins,
/// columns index test bins; indices here are zero-based.
class JointHistogram {
 public:
  explicit JointHistogram(int bins);

  int bins() const noexcept { return bins_; }
  double mass(int ref_bin, int test_bin) const {
    return cells_[static_cast<std::size_t>(ref_bin) * bins_ + test_bin];
  }
  std::span<const double> cells() const noexcept { return cells_; }
  std::size_t overlap_count() const noexcept { return overlap_count_; }

  void add(int ref_bin, int test_bin, double weight) {
    cells_[static_cast<std::size_t>(ref_bin) * bins_ + test_bin] += weight;
    ++overlap_count_;
  }

  /// Sum of all cells, independent of cell order.
  double total() const;
  /// Row sums (reference image marginal).
  std::vector<double> row_marginal() const;
  /// Column sums (test image marginal).
  std::vector<double> col_marginal() const;

  /// Cell-wise addition of another histogram over the same bins.
  JointHistogram& merge(const JointHistogram& other);

  /// K lines of K masses; line k holds reference bin k.
  void write_text(std::ostream& out) const;

 private:
  int bins_;
  std::vector<double> cells_;
  std::size_t overlap_count_ = 0;
};

/// Accumulates the joint histogram of reference and test under `t`, visiting
/// test rows [row_begin, row_end) in row-major order. Every test pixel whose
/// image T(x, y) lies in the reference domain adds its weight to cell
/// (bin(interpolated reference), bin(test)). The weight is 1 without a focus
/// and the focus bilinearly sampled at T(x, y) with one. Does not throw on
/// empty overlap, so partial results can be merged.
JointHistogram accumulate_joint_rows(const Image& reference, const Image& test,
                                     const AffineTransform& t, const BinningScheme& scheme,
                                     const FocusMap* focus, int row_begin, int row_end);

/// Whole-image accumulation with uniform focus. Throws kEmptyOverlap when no
/// pixel contributes.
JointHistogram accumulate_joint(const Image& reference, const Image& test,
                                const AffineTransform& t, const BinningScheme& scheme);

/// Focus-weighted accumulation. The focus must match the reference shape
/// (kInput otherwise). Throws kEmptyOverlap when no pixel contributes or the
/// focus vanishes on the whole overlap.
JointHistogram accumulate_joint(const Image& reference, const Image& test,
                                const AffineTransform& t, const BinningScheme& scheme,
                                const FocusMap& focus);

}  // namespace fmireg
