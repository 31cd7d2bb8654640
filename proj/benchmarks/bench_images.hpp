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

#include <cmath>
#include <random>

#include <fmireg/image.hpp>

namespace fmireg::bench {

// Smooth texture built from a few random cosine waves.
inline Image textured(int size, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> freq(0.02, 0.12), phase(0.0, 6.283185307179586);
  double fx[4], fy[4], ph[4];
  for (int i = 0; i < 4; ++i) {
    fx[i] = freq(rng);
    fy[i] = freq(rng);
    ph[i] = phase(rng);
  }
  Grid<double> g(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      double v = 0.0;
      for (int i = 0; i < 4; ++i) v += std::cos(fx[i] * x + fy[i] * y + ph[i]);
      g(x, y) = 0.5 + v / 8.0;
    }
  }
  return Image(std::move(g));
}

}  // namespace fmireg::bench
