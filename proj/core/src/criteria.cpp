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

#include "fmireg/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "fmireg/entropy.hpp"
#include "fmireg/error.hpp"

namespace fmireg {

Criterion parse_criterion(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "MI") return Criterion::kMI;
  if (upper == "NMI") return Criterion::kNMI;
  if (upper == "ECC") return Criterion::kECC;
  throw Error(ErrorKind::kInput, "unknown criterion '" + std::string(name) + "' (MI, NMI, ECC)");
}

const char* to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::kMI: return "MI";
    case Criterion::kNMI: return "NMI";
    case Criterion::kECC: return "ECC";
  }
  return "?";
}

double CriterionValues::select(Criterion c) const noexcept {
  switch (c) {
    case Criterion::kMI: return mi;
    case Criterion::kNMI: return nmi;
    case Criterion::kECC: return ecc;
  }
  return nmi;
}

CriterionValues criteria_from_histogram(const JointHistogram& h) {
  const double total = h.total();
  if (!(total > 0.0)) throw Error(ErrorKind::kEmptyOverlap, "histogram has no mass");

  CriterionValues v;
  v.h_joint = entropy_of_masses(h.cells(), total);
  v.h_ref = entropy_of_masses(h.row_marginal(), total);
  v.h_test = entropy_of_masses(h.col_marginal(), total);
  if (v.h_joint == 0.0) {
    throw DegenerateHistogramError("single occupied cell, joint entropy is zero");
  }
  const double marginal_sum = v.h_ref + v.h_test;
  v.mi = marginal_sum - v.h_joint;
  v.nmi = marginal_sum / v.h_joint;
  v.ecc = marginal_sum > 0.0 ? 2.0 * v.mi / marginal_sum : 0.0;
  return v;
}

double evaluate_criterion(const Image& reference, const Image& test, const AffineTransform& t,
                          const BinningScheme& scheme, Criterion which) {
  return criteria_from_histogram(accumulate_joint(reference, test, t, scheme)).select(which);
}

double evaluate_criterion(const Image& reference, const Image& test, const AffineTransform& t,
                          const BinningScheme& scheme, const FocusMap& focus, Criterion which) {
  return criteria_from_histogram(accumulate_joint(reference, test, t, scheme, focus)).select(which);
}

}  // namespace fmireg
