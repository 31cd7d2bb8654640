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
#include <string>
#include <vector>

#include "fmireg/affine.hpp"

namespace fmireg {

/// Clamped uniform cubic B-spline. The curve starts at the first control
/// point and ends at the last one.
class SplineCurve {
 public:
  static constexpr int kDegree = 3;

  /// Throws kInput for fewer than four points or non-finite coordinates.
  explicit SplineCurve(std::vector<Point> control_points, std::string name = {});

  std::span<const Point> control_points() const noexcept { return points_; }
  const std::string& name() const noexcept { return name_; }
  std::span<const double> knots() const noexcept { return knots_; }

  /// Curve point at u in [0, 1] (clamped), by de Boor's algorithm.
  Point evaluate(double u) const;

  /// Upper bound on |C'(u)| over [0, 1] from the derivative's control
  /// polygon.
  double max_speed() const;

  /// Samples at uniform parameter steps, consecutive samples less than
  /// `max_spacing` pixels apart. Includes both ends.
  std::vector<Point> sample(double max_spacing = 0.5) const;

 private:
  std::vector<Point> points_;
  std::vector<double> knots_;
  std::string name_;
};

}  // namespace fmireg
