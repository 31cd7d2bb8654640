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

#include "fmireg/binning.hpp"

#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

BinningScheme::BinningScheme(int bins) : bins_(bins) {
  if (bins < 2) throw Error(ErrorKind::kInput, "bin count must be >= 2, got " + std::to_string(bins));
}

int BinningScheme::bin(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kDomain, "intensity outside [0,1]: " + std::to_string(x));
  }
  return bin0_unchecked(x) + 1;
}

}  // namespace fmireg
