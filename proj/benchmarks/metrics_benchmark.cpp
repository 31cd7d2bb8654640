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

#include <fmireg/criteria.hpp>
#include <fmireg/focus.hpp>

#include "bench_images.hpp"

namespace fmireg {

static void AccumulateUniform(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const Image ref = bench::textured(size, 1);
  const Image tst = bench::textured(size, 2);
  const AffineTransform t = AffineTransform::similarity(0.03, 1.01, {size / 2.0, size / 2.0}, 1.5, -0.5);
  const BinningScheme scheme;
  for (auto _ : state) {
    benchmark::DoNotOptimize(accumulate_joint(ref, tst, t, scheme));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

static void AccumulateFocussed(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const Image ref = bench::textured(size, 1);
  const Image tst = bench::textured(size, 2);
  const GaussianComponent g{1.0, {size / 2.0, size / 2.0}, size / 6.0};
  const FocusMap focus = gaussian_mixture_focus(size, size, {&g, 1});
  const AffineTransform t = AffineTransform::similarity(0.03, 1.01, {size / 2.0, size / 2.0}, 1.5, -0.5);
  const BinningScheme scheme;
  for (auto _ : state) {
    benchmark::DoNotOptimize(accumulate_joint(ref, tst, t, scheme, focus));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

static void CriteriaFromHistogram(benchmark::State& state) {
  const Image ref = bench::textured(128, 1);
  const BinningScheme scheme(static_cast<int>(state.range(0)));
  const JointHistogram h = accumulate_joint(ref, ref, AffineTransform::translation(0.3, 0.7), scheme);
  for (auto _ : state) {
    benchmark::DoNotOptimize(criteria_from_histogram(h));
  }
}

BENCHMARK(AccumulateUniform)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(AccumulateFocussed)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(CriteriaFromHistogram)->Arg(32)->Arg(64)->Arg(128);

}  // namespace fmireg
