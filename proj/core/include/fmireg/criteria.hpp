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

#include <string_view>

#include "fmireg/joint_histogram.hpp"

namespace fmireg {

enum class Criterion { kMI, kNMI, kECC };

/// Parses "MI", "NMI" or "ECC" (case-insensitive). Throws kInput otherwise.
Criterion parse_criterion(std::string_view name);
const char* to_string(Criterion c) noexcept;

/// Entropies (nats) of the normalized histogram and the derived criteria:
///   mi  = h_ref + h_test - h_joint
///   nmi = (h_ref + h_test) / h_joint
///   ecc = 2 mi / (h_ref + h_test)
/// With a focus-weighted histogram these are the focussed variants.
struct CriterionValues {
  double h_ref = 0.0;
  double h_test = 0.0;
  double h_joint = 0.0;
  double mi = 0.0;
  double nmi = 0.0;
  double ecc = 0.0;

  double select(Criterion c) const noexcept;
};

/// Throws kEmptyOverlap for a zero-mass histogram and
/// DegenerateHistogramError when a single cell holds all mass.
CriterionValues criteria_from_histogram(const JointHistogram& h);

double evaluate_criterion(const Image& reference, const Image& test, const AffineTransform& t,
                          const BinningScheme& scheme, Criterion which);
double evaluate_criterion(const Image& reference, const Image& test, const AffineTransform& t,
                          const BinningScheme& scheme, const FocusMap& focus, Criterion which);

}  // namespace fmireg
