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

#include "fmireg/focus.hpp"

#include <cmath>
#include <numbers>

#include "fmireg/error.hpp"
#include "fmireg/filters.hpp"
#include "fmireg/morphology.hpp"

namespace fmireg {

FocusMap gaussian_mixture_focus(int width, int height,
                                std::span<const GaussianComponent> components) {
  if (components.empty()) throw Error(ErrorKind::kInput, "gaussian focus needs at least one component");
  double weight_sum = 0.0;
  for (const auto& c : components) {
    if (!(c.weight > 0.0)) throw Error(ErrorKind::kInput, "mixture weights must be positive");
    if (!(c.sigma > 0.0)) throw Error(ErrorKind::kInput, "mixture sigmas must be positive");
    weight_sum += c.weight;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw Error(ErrorKind::kInput, "mixture weights must sum to 1");
  }
  Grid<double> g(width, height, 0.0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double v = 0.0;
      for (const auto& c : components) {
        const double dx = x - c.center.x;
        const double dy = y - c.center.y;
        const double var = c.sigma * c.sigma;
        v += c.weight / (2.0 * std::numbers::pi * var) * std::exp(-(dx * dx + dy * dy) / (2.0 * var));
      }
      g(x, y) = v;
    }
  }
  return FocusMap(std::move(g)).normalized();
}

Image rasterize_curves(std::span<const SplineCurve> curves, int width, int height) {
  Grid<double> raster(width, height, 0.0);
  for (const auto& curve : curves) {
    for (const Point& p : curve.sample(0.5)) {
      const long x = std::lround(p.x);
      const long y = std::lround(p.y);
      if (x >= 0 && y >= 0 && x < width && y < height) {
        raster(static_cast<int>(x), static_cast<int>(y)) = 1.0;
      }
    }
  }
  return Image(std::move(raster));
}

FocusMap spline_focus(std::span<const SplineCurve> curves, int width, int height, double sigma) {
  const Image raster = rasterize_curves(curves, width, height);
  bool any = false;
  for (double v : raster.values()) any = any || v > 0.0;
  if (!any) throw Error(ErrorKind::kEmptyFocus, "no spline curve passes through the image");
  return FocusMap(gaussian_convolve(raster.grid(), sigma)).normalized();
}

Image edge_map(const Image& reference, const FocusParams& params) {
  return gaussian_convolve(gradient_modulus(median_filter(reference, params.median_radius)),
                           params.sigma_edge);
}

BinaryMask object_patch(const Image& reference, const FocusParams& params) {
  const Image denoised = median_filter(reference, params.median_radius);
  const double t = params.threshold ? *params.threshold
                                    : otsu_threshold(denoised, BinningScheme(params.otsu_bins));
  return morph_dilate(morph_close(threshold_mask(denoised, t), params.close_radius),
                      params.dilate_radius);
}

FocusMap preset_restoration_focus(const Image& reference, const FocusParams& params) {
  // Edges first, then the patch: cutting the patch before edge detection
  // would add spurious edges along its border.
  const Image edges = edge_map(reference, params);
  return mask_multiply(edges, object_patch(reference, params)).normalized();
}

FocusMap preset_implant_focus(const Image& reference, const FocusParams& params) {
  return preset_restoration_focus(reference, params);
}

FocusMap preset_bone_focus(const Image& reference, const FocusParams& params) {
  const Image edges = edge_map(reference, params);
  return mask_multiply(edges, complement(object_patch(reference, params))).normalized();
}

}  // namespace fmireg
