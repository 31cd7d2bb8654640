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

#include <optional>
#include <span>

#include "fmireg/affine.hpp"
#include "fmireg/bspline.hpp"
#include "fmireg/focus_map.hpp"
#include "fmireg/image.hpp"

namespace fmireg {

struct GaussianComponent {
  double weight = 1.0;
  Point center;
  double sigma = 1.0;
};

/// Convex combination of isotropic normal densities sampled at pixel
/// centers, normalized to sum 1 over the image. Weights must be positive and
/// sum to 1 within 1e-9; sigmas must be positive (kInput otherwise).
FocusMap gaussian_mixture_focus(int width, int height, std::span<const GaussianComponent> components);

/// Sets every pixel hit by the curve samples to 1. Samples falling outside
/// the image are dropped.
Image rasterize_curves(std::span<const SplineCurve> curves, int width, int height);

/// rasterize_curves, Gaussian blur, normalize. Throws kEmptyFocus when no
/// curve touches the image.
FocusMap spline_focus(std::span<const SplineCurve> curves, int width, int height, double sigma);

/// Parameters shared by the edge-and-patch presets.
struct FocusParams {
  int median_radius = 1;
  double sigma_edge = 2.0;
  double sigma_spline = 3.0;
  int close_radius = 2;
  int dilate_radius = 4;
  /// Manual segmentation threshold; Otsu when empty.
  std::optional<double> threshold;
  /// Bins used by Otsu's method.
  int otsu_bins = 64;
};

/// Median filter, gradient modulus, Gaussian blur.
Image edge_map(const Image& reference, const FocusParams& params);

/// Threshold (manual or Otsu) of the median-filtered image, then closing and
/// dilation. The patch covers the radio-opaque object.
BinaryMask object_patch(const Image& reference, const FocusParams& params);

/// Edges inside the patch around a bright restoration.
FocusMap preset_restoration_focus(const Image& reference, const FocusParams& params = {});
/// Edges inside the patch around a bright implant.
FocusMap preset_implant_focus(const Image& reference, const FocusParams& params = {});
/// Edges outside the implant patch, i.e. the surrounding bone.
FocusMap preset_bone_focus(const Image& reference, const FocusParams& params = {});

}  // namespace fmireg
