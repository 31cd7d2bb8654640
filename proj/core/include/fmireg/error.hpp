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

#include <stdexcept>
#include <string>

namespace fmireg {

/// Failure categories. The CLI maps each category onto an exit code.
enum class ErrorKind {
  kInput,                // malformed file, bad argument, out-of-range parameter
  kDomain,               // value outside its mathematical domain
  kInvalidDistribution,  // negative entries or entries not summing to 1
  kSingularTransform,
  kDegenerateLandmarks,
  kEmptyOverlap,
  kDegenerateHistogram,
  kEmptyFocus,
  kNoThreshold,
  kTooSmall,
  kRegistrationFailed,
  kInternal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when the joint histogram has a single occupied cell, so the joint
/// entropy vanishes and the normalized criterion is undefined. MI is 0 there.
class DegenerateHistogramError : public Error {
 public:
  explicit DegenerateHistogramError(const std::string& what)
      : Error(ErrorKind::kDegenerateHistogram, what) {}

  double mi() const noexcept { return 0.0; }
};

}  // namespace fmireg
