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

#include <benchmark/benchmark.h>

#include <fmireg/filters.hpp>
#include <fmireg/focus.hpp>
#include <fmireg/morphology.hpp>

#include "bench_images.hpp"

namespace fmireg {

static void GaussianConvolve(benchmark::State& state) {
  const Image img = bench::textured(256, 3);
  const double sigma = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_convolve(img, sigma));
  }
}

static void MedianFilter(benchmark::State& state) {
  const Image img = bench::textured(256, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(median_filter(img, static_cast<int>(state.range(0))));
  }
}

static void RestorationPreset(benchmark::State& state) {
  const Image img = bench::textured(256, 3);
  FocusParams params;
  params.threshold = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(preset_restoration_focus(img, params));
  }
}

BENCHMARK(GaussianConvolve)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(MedianFilter)->Arg(1)->Arg(2);
BENCHMARK(RestorationPreset);

}  // namespace fmireg
