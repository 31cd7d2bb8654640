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

#include <vector>

#include "fmireg/image.hpp"

namespace fmireg {

/// Median over the (2r+1)^2 window clipped to the image. For an even number
/// of available pixels the two middle values are averaged.
Image median_filter(const Image& img, int radius = 1);

/// Sobel gradient modulus with replicated borders, divided by 4 sqrt(2) so
/// the output stays in [0, 1]. Throws kTooSmall below 3x3.
Image gradient_modulus(const Image& img);

/// Normalized discrete Gaussian sampled on [-ceil(3 sigma), ceil(3 sigma)].
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian smoothing with replicated borders.
Grid<double> gaussian_convolve(const Grid<double>& g, double sigma);
Image gaussian_convolve(const Image& img, double sigma);

}  // namespace fmireg
