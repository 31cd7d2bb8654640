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

#include "fmireg/joint_histogram.hpp"

#include <iomanip>
#include <limits>
#include <ostream>

#include "fmireg/entropy.hpp"
#include "fmireg/error.hpp"
#include "fmireg/sampling.hpp"

namespace fmireg {

JointHistogram::JointHistogram(int bins)
    : bins_(bins), cells_(static_cast<std::size_t>(bins) * static_cast<std::size_t>(bins), 0.0) {
  if (bins < 2) throw Error(ErrorKind::kInput, "histogram needs at least 2 bins");
}

// Sums go through order_free_sum so relabeling bins never changes a bit.
double JointHistogram::total() const { return order_free_sum(cells_); }

std::vector<double> JointHistogram::row_marginal() const {
  std::vector<double> m(bins_, 0.0);
  for (int k = 0; k < bins_; ++k) {
    m[k] = order_free_sum(cells().subspan(static_cast<std::size_t>(k) * bins_, bins_));
  }
  return m;
}

std::vector<double> JointHistogram::col_marginal() const {
  std::vector<double> m(bins_, 0.0);
  std::vector<double> column(bins_);
  for (int l = 0; l < bins_; ++l) {
    for (int k = 0; k < bins_; ++k) column[k] = mass(k, l);
    m[l] = order_free_sum(column);
  }
  return m;
}

JointHistogram& JointHistogram::merge(const JointHistogram& other) {
  if (other.bins_ != bins_) throw Error(ErrorKind::kInput, "cannot merge histograms with different bins");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  overlap_count_ += other.overlap_count_;
  return *this;
}

void JointHistogram::write_text(std::ostream& out) const {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (int k = 0; k < bins_; ++k) {
    for (int l = 0; l < bins_; ++l) {
      if (l) out << ' ';
      out << mass(k, l);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

JointHistogram accumulate_joint_rows(const Image& reference, const Image& test,
                                     const AffineTransform& t, const BinningScheme& scheme,
                                     const FocusMap* focus, int row_begin, int row_end) {
  if (focus && (focus->width() != reference.width() || focus->height() != reference.height())) {
    throw Error(ErrorKind::kInput, "focus map must match the reference image shape");
  }
  JointHistogram h(scheme.bins());
  if (row_begin < 0) row_begin = 0;
  if (row_end > test.height()) row_end = test.height();
  for (int y = row_begin; y < row_end; ++y) {
    for (int x = 0; x < test.width(); ++x) {
      const Point p = t.apply(x, y);
      const auto ref_value = bilinear_sample(reference, p.x, p.y);
      if (!ref_value) continue;
      const double weight = focus ? *bilinear_sample(focus->weights(), p.x, p.y) : 1.0;
      h.add(scheme.bin0_unchecked(*ref_value), scheme.bin0_unchecked(test(x, y)), weight);
    }
  }
  return h;
}

namespace {

JointHistogram checked(JointHistogram h) {
  if (h.overlap_count() == 0) throw Error(ErrorKind::kEmptyOverlap, "no test pixel maps into the reference");
  if (!(h.total() > 0.0)) throw Error(ErrorKind::kEmptyOverlap, "focus vanishes on the whole overlap");
  return h;
}

}  // namespace

JointHistogram accumulate_joint(const Image& reference, const Image& test,
                                const AffineTransform& t, const BinningScheme& scheme) {
  return checked(accumulate_joint_rows(reference, test, t, scheme, nullptr, 0, test.height()));
}

JointHistogram accumulate_joint(const Image& reference, const Image& test,
                                const AffineTransform& t, const BinningScheme& scheme,
                                const FocusMap& focus) {
  return checked(accumulate_joint_rows(reference, test, t, scheme, &focus, 0, test.height()));
}

}  // namespace fmireg
