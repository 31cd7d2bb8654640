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

#include "fmireg/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidDistribution, "negative or non-finite probability");
    }
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= 1e-9)) {
    throw Error(ErrorKind::kInvalidDistribution, "probabilities sum to " + std::to_string(sum));
  }
  return entropy_of_masses(p, 1.0);
}

namespace {

std::vector<double> sorted_positive(std::span<const double> values) {
  std::vector<double> v;
  v.reserve(values.size());
  for (double x : values) {
    if (x > 0.0) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// Terms are summed in ascending order of mass so the result is invariant
// under any permutation of the input, bit for bit.
double entropy_of_masses(std::span<const double> masses, double total) {
  double h = 0.0;
  for (double m : sorted_positive(masses)) {
    const double q = m / total;
    h -= q * std::log(q);
  }
  return h < 0.0 ? 0.0 : h;
}

double order_free_sum(std::span<const double> values) {
  double s = 0.0;
  for (double x : sorted_positive(values)) s += x;
  return s;
}

}  // namespace fmireg
