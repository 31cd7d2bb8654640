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

#include <array>
#include <span>

namespace fmireg {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Planar affine map p -> A p + t with |det A| > kMinDeterminant.
/// In registration the map sends test-image pixel coordinates into the
/// reference image.
class AffineTransform {
 public:
  static constexpr double kMinDeterminant = 1e-12;

  /// Identity.
  AffineTransform() = default;
  /// Throws kSingularTransform if |det| <= kMinDeterminant or any entry is
  /// not finite.
  AffineTransform(double a11, double a12, double a21, double a22, double tx, double ty);

  static AffineTransform identity() { return {}; }
  static AffineTransform translation(double tx, double ty) { return {1, 0, 0, 1, tx, ty}; }
  /// Rotation by `radians` and isotropic `scale` about `center`, followed by
  /// a shift of (tx, ty).
  static AffineTransform similarity(double radians, double scale, Point center, double tx = 0.0,
                                    double ty = 0.0);

  double a11() const noexcept { return a11_; }
  double a12() const noexcept { return a12_; }
  double a21() const noexcept { return a21_; }
  double a22() const noexcept { return a22_; }
  double tx() const noexcept { return tx_; }
  double ty() const noexcept { return ty_; }

  double determinant() const noexcept { return a11_ * a22_ - a12_ * a21_; }

  Point apply(double x, double y) const noexcept {
    return {a11_ * x + a12_ * y + tx_, a21_ * x + a22_ * y + ty_};
  }
  Point apply(Point p) const noexcept { return apply(p.x, p.y); }

  AffineTransform inverse() const;

  /// Ordered (a11, a12, a21, a22, tx, ty).
  std::array<double, 6> parameters() const noexcept { return {a11_, a12_, a21_, a22_, tx_, ty_}; }

  friend bool operator==(const AffineTransform&, const AffineTransform&) = default;

 private:
  double a11_ = 1.0, a12_ = 0.0, a21_ = 0.0, a22_ = 1.0, tx_ = 0.0, ty_ = 0.0;
};

/// (outer o inner)(p) = outer(inner(p)).
AffineTransform compose(const AffineTransform& outer, const AffineTransform& inner);

/// 6-vector in (a11, a12, a21, a22, tx, ty) order.
std::array<double, 6> parameterize(const AffineTransform& t) noexcept;
/// Inverse of parameterize; rejects singular matrices.
AffineTransform deparameterize(std::span<const double, 6> v);

/// Least-squares affine T minimizing sum |T(test[i]) - reference[i]|^2.
/// Throws kDegenerateLandmarks for fewer than three pairs, mismatched
/// lengths, collinear test points, or a singular fitted matrix.
AffineTransform fit_affine_least_squares(std::span<const Point> reference_points,
                                         std::span<const Point> test_points);

}  // namespace fmireg
