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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fmireg/affine.hpp"
#include "fmireg/binning.hpp"
#include "fmireg/criteria.hpp"
#include "fmireg/focus_map.hpp"
#include "fmireg/image.hpp"

namespace fmireg {

/// Search box and optimizer settings. The box is centered on `initial` and
/// spans +-half_widths[i] in each of (a11, a12, a21, a22, tx, ty).
struct SearchSpec {
  AffineTransform initial;
  std::array<double, 6> half_widths = box(0.15, 20.0);
  Criterion criterion = Criterion::kNMI;
  /// Extra Nelder-Mead starts at Halton points inside the box.
  int restarts = 3;
  /// Evaluation budget of each simplex run.
  int max_evals = 2000;
  /// A run stops once the simplex values spread by no more than this.
  double tolerance = 1e-6;
  /// Offset into the Halton sequence used for restart points.
  unsigned seed = 0;
  /// Trials covering less than this share of the test pixels are invalid.
  double min_overlap_fraction = 0.01;

  static constexpr std::array<double, 6> box(double matrix, double translation) {
    return {matrix, matrix, matrix, matrix, translation, translation};
  }

  /// Throws kInput on negative half widths, max_evals < 1, tolerance <= 0 or
  /// restarts < 0.
  void validate() const;
};

struct TraceEntry {
  std::array<double, 6> parameters{};
  /// Criterion value, or -infinity for an invalid trial.
  double value = 0.0;
};

struct RegistrationResult {
  AffineTransform best;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  std::vector<TraceEntry> trace;
  double overlap_fraction = 0.0;
};

/// Maximizes the selected criterion over affine transforms inside the
/// search box with box-clamped Nelder-Mead from `spec.initial`, then from
/// `spec.restarts` Halton points. Invalid trials (empty or sub-threshold
/// overlap, singular matrix, single-cell histogram) score -infinity. Pass
/// nullptr for a uniform focus. Throws kRegistrationFailed if every trial is
/// invalid. The result is a deterministic function of the inputs.
RegistrationResult register_images(const Image& reference, const Image& test,
                                   const FocusMap* focus, const SearchSpec& spec,
                                   const BinningScheme& scheme = BinningScheme{});

/// 2x2 box-average reduction; odd trailing rows and columns are dropped.
/// Coarse pixel (i, j) covers fine coordinates (2i + 0.5, 2j + 0.5).
Grid<double> downsample(const Grid<double>& g);
Image downsample(const Image& img);

/// Expresses a full-resolution transform in the coordinates of pyramid
/// level `level` (level 0 is full resolution) and back.
AffineTransform transform_to_level(const AffineTransform& t, int level);
AffineTransform transform_from_level(const AffineTransform& t, int level);

/// Coarse-to-fine registration over `levels` pyramid levels. Each level
/// searches a box of spec.half_widths around the estimate propagated from
/// the coarser level, with translation widths counted in that level's
/// pixels. levels == 1 is exactly register_images. The returned trace is
/// the finest level's; evaluations counts every level.
RegistrationResult multiresolution_register(const Image& reference, const Image& test,
                                            const FocusMap* focus, const SearchSpec& spec,
                                            const BinningScheme& scheme, int levels);

/// Table "iteration a11 a12 a21 a22 tx ty value", one row per evaluation.
void write_trace(std::ostream& out, const RegistrationResult& result);

}  // namespace fmireg
