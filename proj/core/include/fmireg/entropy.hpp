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

#include <span>
#include <vector>

namespace fmireg {

/// -sum p_i ln p_i in nats with 0 ln 0 = 0.
/// Throws kInvalidDistribution for a negative entry or |sum - 1| > 1e-9.
double shannon_entropy(std::span<const double> p);

/// Entropy of the distribution masses / total, without validation. Zero
/// masses are skipped.
double entropy_of_masses(std::span<const double> masses, double total);

/// Sum of the nonzero values taken in ascending order. The result depends
/// only on the multiset of inputs, so reordering them is bit-exact.
double order_free_sum(std::span<const double> values);

}  // namespace fmireg
