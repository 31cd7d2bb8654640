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

#include "fmireg/error.hpp"

namespace fmireg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInput: return "input-error";
    case ErrorKind::kDomain: return "domain-error";
    case ErrorKind::kInvalidDistribution: return "invalid-distribution";
    case ErrorKind::kSingularTransform: return "singular-transform";
    case ErrorKind::kDegenerateLandmarks: return "degenerate-landmarks";
    case ErrorKind::kEmptyOverlap: return "empty-overlap";
    case ErrorKind::kDegenerateHistogram: return "degenerate-histogram";
    case ErrorKind::kEmptyFocus: return "empty-focus";
    case ErrorKind::kNoThreshold: return "no-threshold";
    case ErrorKind::kTooSmall: return "too-small";
    case ErrorKind::kRegistrationFailed: return "registration-failed";
    case ErrorKind::kInternal: return "internal-error";
  }
  return "unknown-error";
}

}  // namespace fmireg
