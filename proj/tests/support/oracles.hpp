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

// Naive reference computations used to check the library. They loop over
// pixels and cells directly and share no code with the implementation.

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include <fmireg/affine.hpp>
#include <fmireg/focus_map.hpp>
#include <fmireg/image.hpp>

namespace fmireg::testing {

struct NaiveSample {
  bool inside = false;
  double value = 0.0;
};

/// Bilinear interpolation on the closed hull of pixel centers.
inline NaiveSample naive_bilinear(const Grid<double>& g, double X, double Y) {
  const double W = g.width(), H = g.height();
  if (X < 0.0 || Y < 0.0 || X > W - 1.0 || Y > H - 1.0 || X != X || Y != Y) return {};
  const int i = static_cast<int>(std::floor(X));
  const int j = static_cast<int>(std::floor(Y));
  const double fx = X - i, fy = Y - j;
  auto at = [&](int a, int b) {
    // Neighbours beyond the last row/column only ever get weight 0.
    if (a > g.width() - 1) a = g.width() - 1;
    if (b > g.height() - 1) b = g.height() - 1;
    return g(a, b);
  };
  if (i == g.width() - 1 || j == g.height() - 1) {
    // On the far edge the formula degenerates; evaluate the lower cell.
    const int ii = i == g.width() - 1 && i > 0 ? i - 1 : i;
    const int jj = j == g.height() - 1 && j > 0 ? j - 1 : j;
    const double gx = X - ii, gy = Y - jj;
    const double top = at(ii, jj) * (1.0 - gx) + at(ii + 1, jj) * gx;
    const double bottom = at(ii, jj + 1) * (1.0 - gx) + at(ii + 1, jj + 1) * gx;
    return {true, top * (1.0 - gy) + bottom * gy};
  }
  const double top = at(i, j) * (1.0 - fx) + at(i + 1, j) * fx;
  const double bottom = at(i, j + 1) * (1.0 - fx) + at(i + 1, j + 1) * fx;
  return {true, top * (1.0 - fy) + bottom * fy};
}

inline int naive_bin(double v, int K) {
  int k = static_cast<int>(std::floor(v * K));
  if (k < 0) k = 0;
  if (k > K - 1) k = K - 1;
  return k;
}

struct NaiveHistogram {
  std::map<std::pair<int, int>, double> cells;
  std::size_t count = 0;
};

/// Joint counts C_T(k, l) (or focus-weighted W_T(k, l)) by direct loop.
inline NaiveHistogram naive_joint(const Image& u, const Image& v, const AffineTransform& t, int K,
                                  const FocusMap* f) {
  NaiveHistogram h;
  for (int n = 0; n < v.height(); ++n) {
    for (int m = 0; m < v.width(); ++m) {
      const double X = t.a11() * m + t.a12() * n + t.tx();
      const double Y = t.a21() * m + t.a22() * n + t.ty();
      const NaiveSample s = naive_bilinear(u.grid(), X, Y);
      if (!s.inside) continue;
      const double w = f ? naive_bilinear(f->weights(), X, Y).value : 1.0;
      h.cells[{naive_bin(s.value, K), naive_bin(v(m, n), K)}] += w;
      ++h.count;
    }
  }
  return h;
}

struct NaiveCriteria {
  double h_ref, h_test, h_joint, mi, nmi, ecc;
};

inline NaiveCriteria naive_criteria(const NaiveHistogram& h, int K) {
  double total = 0.0;
  for (const auto& [key, m] : h.cells) total += m;
  std::vector<double> pr(K, 0.0), pt(K, 0.0);
  double hj = 0.0;
  for (const auto& [key, m] : h.cells) {
    const double p = m / total;
    pr[key.first] += p;
    pt[key.second] += p;
    if (p > 0) hj -= p * std::log(p);
  }
  double hr = 0.0, ht = 0.0;
  for (int k = 0; k < K; ++k) {
    if (pr[k] > 0) hr -= pr[k] * std::log(pr[k]);
    if (pt[k] > 0) ht -= pt[k] * std::log(pt[k]);
  }
  return {hr, ht, hj, hr + ht - hj, (hr + ht) / hj, 2.0 * (hr + ht - hj) / (hr + ht)};
}

/// Otsu by exhaustive search: every split k, class variance from scratch.
inline int naive_otsu_split(const Image& img, int K) {
  std::vector<double> count(K, 0.0);
  for (double v : img.values()) count[naive_bin(v, K)] += 1.0;
  int best = -1;
  double best_var = -1.0;
  for (int k = 0; k < K - 1; ++k) {
    double w0 = 0, w1 = 0, s0 = 0, s1 = 0;
    for (int i = 0; i <= k; ++i) { w0 += count[i]; s0 += i * count[i]; }
    for (int i = k + 1; i < K; ++i) { w1 += count[i]; s1 += i * count[i]; }
    if (w0 == 0 || w1 == 0) continue;
    const double d = s0 / w0 - s1 / w1;
    const double var = w0 * w1 * d * d;
    if (var > best_var * (1.0 + 1e-12)) {
      best_var = var;
      best = k;
    }
  }
  return best;
}

}  // namespace fmireg::testing
