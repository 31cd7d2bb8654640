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

#include "fmireg/bspline.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "fmireg/error.hpp"

namespace fmireg {

SplineCurve::SplineCurve(std::vector<Point> control_points, std::string name)
    : points_(std::move(control_points)), name_(std::move(name)) {
  if (points_.size() < 4) {
    throw Error(ErrorKind::kInput, "a cubic B-spline needs at least 4 control points");
  }
  for (const Point& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorKind::kInput, "non-finite control point");
    }
  }
  // Clamped uniform knot vector: four zeros, n-4 interior knots, four ones.
  const int n = static_cast<int>(points_.size());
  const int segments = n - kDegree;
  knots_.assign(kDegree + 1, 0.0);
  for (int i = 1; i < segments; ++i) knots_.push_back(static_cast<double>(i) / segments);
  knots_.insert(knots_.end(), kDegree + 1, 1.0);
}

Point SplineCurve::evaluate(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  const int n = static_cast<int>(points_.size());
  // Knot span k with knots[k] <= u < knots[k+1], k in [3, n-1].
  int k = n - 1;
  if (u < 1.0) {
    k = static_cast<int>(std::upper_bound(knots_.begin(), knots_.end(), u) - knots_.begin()) - 1;
    k = std::clamp(k, kDegree, n - 1);
  }
  std::array<Point, kDegree + 1> d;
  for (int j = 0; j <= kDegree; ++j) d[j] = points_[j + k - kDegree];
  for (int r = 1; r <= kDegree; ++r) {
    for (int j = kDegree; j >= r; --j) {
      const int i = j + k - kDegree;
      const double denom = knots_[i + kDegree + 1 - r] - knots_[i];
      const double alpha = denom > 0.0 ? (u - knots_[i]) / denom : 0.0;
      d[j] = {(1.0 - alpha) * d[j - 1].x + alpha * d[j].x,
              (1.0 - alpha) * d[j - 1].y + alpha * d[j].y};
    }
  }
  return d[kDegree];
}

double SplineCurve::max_speed() const {
  // The derivative is a quadratic B-spline with control points
  // 3 (P[i+1] - P[i]) / (t[i+4] - t[i+1]); the curve lies in their hull.
  double speed = 0.0;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const double span = knots_[i + kDegree + 1] - knots_[i + 1];
    if (span <= 0.0) continue;
    const double dx = points_[i + 1].x - points_[i].x;
    const double dy = points_[i + 1].y - points_[i].y;
    speed = std::max(speed, kDegree * std::hypot(dx, dy) / span);
  }
  return speed;
}

std::vector<Point> SplineCurve::sample(double max_spacing) const {
  if (!(max_spacing > 0.0)) throw Error(ErrorKind::kInput, "sample spacing must be positive");
  const double bound = max_speed();
  const auto steps = static_cast<std::size_t>(std::floor(bound / max_spacing)) + 1;
  std::vector<Point> out;
  out.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    out.push_back(evaluate(static_cast<double>(i) / static_cast<double>(steps)));
  }
  return out;
}

}  // namespace fmireg
