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

#include "fmireg/affine.hpp"

#include <cmath>
#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

AffineTransform::AffineTransform(double a11, double a12, double a21, double a22, double tx,
                                 double ty)
    : a11_(a11), a12_(a12), a21_(a21), a22_(a22), tx_(tx), ty_(ty) {
  for (double v : {a11, a12, a21, a22, tx, ty}) {
    if (!std::isfinite(v)) throw Error(ErrorKind::kSingularTransform, "non-finite parameter");
  }
  if (!(std::abs(determinant()) > kMinDeterminant)) {
    throw Error(ErrorKind::kSingularTransform,
                "|det| = " + std::to_string(std::abs(determinant())) + " <= 1e-12");
  }
}

AffineTransform AffineTransform::similarity(double radians, double scale, Point center, double tx,
                                            double ty) {
  const double c = scale * std::cos(radians);
  const double s = scale * std::sin(radians);
  // p -> R (p - center) + center + shift
  return {c, -s, s, c, center.x - (c * center.x - s * center.y) + tx,
          center.y - (s * center.x + c * center.y) + ty};
}

AffineTransform AffineTransform::inverse() const {
  const double det = determinant();
  const double i11 = a22_ / det;
  const double i12 = -a12_ / det;
  const double i21 = -a21_ / det;
  const double i22 = a11_ / det;
  return {i11, i12, i21, i22, -(i11 * tx_ + i12 * ty_), -(i21 * tx_ + i22 * ty_)};
}

AffineTransform compose(const AffineTransform& outer, const AffineTransform& inner) {
  const Point t = outer.apply(inner.tx(), inner.ty());
  return {outer.a11() * inner.a11() + outer.a12() * inner.a21(),
          outer.a11() * inner.a12() + outer.a12() * inner.a22(),
          outer.a21() * inner.a11() + outer.a22() * inner.a21(),
          outer.a21() * inner.a12() + outer.a22() * inner.a22(),
          t.x,
          t.y};
}

std::array<double, 6> parameterize(const AffineTransform& t) noexcept { return t.parameters(); }

AffineTransform deparameterize(std::span<const double, 6> v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

AffineTransform fit_affine_least_squares(std::span<const Point> reference_points,
                                         std::span<const Point> test_points) {
  const std::size_t n = test_points.size();
  if (reference_points.size() != n) {
    throw Error(ErrorKind::kDegenerateLandmarks, "point lists differ in length");
  }
  if (n < 3) throw Error(ErrorKind::kDegenerateLandmarks, "need at least 3 point pairs");

  Point test_mean, ref_mean;
  for (std::size_t i = 0; i < n; ++i) {
    test_mean.x += test_points[i].x;
    test_mean.y += test_points[i].y;
    ref_mean.x += reference_points[i].x;
    ref_mean.y += reference_points[i].y;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  test_mean = {test_mean.x * inv_n, test_mean.y * inv_n};
  ref_mean = {ref_mean.x * inv_n, ref_mean.y * inv_n};

  // Centered normal equations: S a = b, with S the scatter of the test points.
  double sxx = 0, sxy = 0, syy = 0;
  double bxx = 0, bxy = 0, byx = 0, byy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = test_points[i].x - test_mean.x;
    const double dy = test_points[i].y - test_mean.y;
    const double rx = reference_points[i].x - ref_mean.x;
    const double ry = reference_points[i].y - ref_mean.y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
    bxx += dx * rx;
    bxy += dy * rx;
    byx += dx * ry;
    byy += dy * ry;
  }
  const double det = sxx * syy - sxy * sxy;
  const double trace = sxx + syy;
  if (!(trace > 0.0) || !(det > 1e-12 * trace * trace)) {
    throw Error(ErrorKind::kDegenerateLandmarks, "test landmarks are collinear or coincident");
  }
  const double a11 = (syy * bxx - sxy * bxy) / det;
  const double a12 = (sxx * bxy - sxy * bxx) / det;
  const double a21 = (syy * byx - sxy * byy) / det;
  const double a22 = (sxx * byy - sxy * byx) / det;
  const double tx = ref_mean.x - (a11 * test_mean.x + a12 * test_mean.y);
  const double ty = ref_mean.y - (a21 * test_mean.x + a22 * test_mean.y);
  try {
    return {a11, a12, a21, a22, tx, ty};
  } catch (const Error&) {
    throw Error(ErrorKind::kDegenerateLandmarks, "reference landmarks are collinear");
  }
}

}  // namespace fmireg
