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

#include <fmireg/registration.hpp>

#include "bench_images.hpp"

namespace fmireg {

static void RegisterTranslation(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const Image ref = bench::textured(size, 5);
  SearchSpec spec;
  spec.half_widths = SearchSpec::box(0.05, 6.0);
  spec.restarts = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(register_images(ref, ref, nullptr, spec));
  }
}

BENCHMARK(RegisterTranslation)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace fmireg
