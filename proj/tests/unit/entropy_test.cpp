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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <doctest.h>

#include <fmireg/criteria.hpp>
#include <fmireg/entropy.hpp>
#include <fmireg/joint_histogram.hpp>

#include "oracles.hpp"
#include "phantoms.hpp"
#include "test_util.hpp"

using namespace fmireg;
using namespace fmireg::testing;

namespace {

AffineTransform small_affine(std::mt19937& rng, double m = 0.1, double t = 2.0) {
  std::uniform_real_distribution<double> dm(-m, m), dt(-t, t);
  return AffineTransform(1 + dm(rng), dm(rng), dm(rng), 1 + dm(rng), dt(rng), dt(rng));
}

bool same_cells(const JointHistogram& a, const JointHistogram& b) {
  return std::equal(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end());
}

// Image whose gray bins are remapped by a permutation of the K labels. Each
// pixel moves to the center of its new bin, so binning sees exactly the
// permuted labels.
Image relabel(const Image& img, const std::vector<int>& perm, int K) {
  Grid<double> g(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) g(x, y) = (perm[naive_bin(img(x, y), K)] + 0.5) / K;
  return Image(std::move(g));
}

Image quantize(const Image& img, int K) {
  std::vector<int> id(K);
  std::iota(id.begin(), id.end(), 0);
  return relabel(img, id, K);
}

}  // namespace

TEST_SUITE("shannon entropy") {
  TEST_CASE("examples") {
    CHECK(shannon_entropy(std::vector<double>{1, 0, 0}) == 0.0);
    CHECK(shannon_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(shannon_entropy(std::vector<double>{0.5, 0.25, 0.25}) ==
          doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-15));
  }

  TEST_CASE("invalid distributions") {
    CHECK_ERROR_KIND(shannon_entropy(std::vector<double>{0.5, 0.6}), ErrorKind::kInvalidDistribution);
    CHECK_ERROR_KIND(shannon_entropy(std::vector<double>{1.5, -0.5}), ErrorKind::kInvalidDistribution);
    CHECK_ERROR_KIND(shannon_entropy(std::vector<double>{}), ErrorKind::kInvalidDistribution);
    CHECK_NOTHROW(shannon_entropy(std::vector<double>{0.5, 0.5 + 5e-10}));
  }

  TEST_CASE("uniform distributions give ln n, strictly increasing") {
    double prev = -1.0;
    for (int n = 1; n <= 256; ++n) {
      const double h = shannon_entropy(std::vector<double>(n, 1.0 / n));
      CHECK(std::abs(h - std::log(double(n))) <= 1e-12);
      CHECK(h > prev);
      prev = h;
    }
  }

  TEST_CASE("grouping axiom and exact permutation invariance") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> size(2, 16);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = size(rng);
      std::vector<double> p(n);
      for (double& v : p) v = u(rng) + 1e-3;
      const double s = std::accumulate(p.begin(), p.end(), 0.0);
      for (double& v : p) v /= s;
      const double h = shannon_entropy(p);
      CHECK(h >= 0.0);
      CHECK(h <= std::log(double(n)) + 1e-12);
      auto q = p;
      std::shuffle(q.begin(), q.end(), rng);
      CHECK(shannon_entropy(q) == h);
      const double m = p[n - 2] + p[n - 1];
      std::vector<double> coarse(p.begin(), p.end() - 1);
      coarse.back() = m;
      const double rhs = shannon_entropy(coarse) + m * shannon_entropy(std::vector<double>{p[n - 2] / m, p[n - 1] / m});
      CHECK(std::abs(h - rhs) <= 1e-12);
    }
  }

  TEST_CASE("order free sum depends only on the multiset") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(500);
    for (double& x : v) x = u(rng) * std::pow(10.0, 6 * u(rng) - 3);
    const double s = order_free_sum(v);
    for (int i = 0; i < 10; ++i) {
      std::shuffle(v.begin(), v.end(), rng);
      CHECK(order_free_sum(v) == s);
    }
    CHECK(order_free_sum(std::vector<double>{0, 0}) == 0.0);
  }
}

TEST_SUITE("joint histogram") {
  TEST_CASE("two-pixel hand counts, uniform and weighted") {
    const Image img(2, 1, std::vector<double>{0.1, 0.9});
    const BinningScheme k4(4);
    const auto h = accumulate_joint(img, img, AffineTransform::identity(), k4);
    CHECK(h.mass(0, 0) == 1.0);
    CHECK(h.mass(3, 3) == 1.0);
    CHECK(h.total() == 2.0);
    CHECK(h.overlap_count() == 2);
    const FocusMap f(Grid<double>(2, 1, std::vector<double>{0.75, 0.25}));
    const auto w = accumulate_joint(img, img, AffineTransform::identity(), k4, f);
    CHECK(w.mass(0, 0) == 0.75);
    CHECK(w.mass(3, 3) == 0.25);
    CHECK(w.total() == 1.0);
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l)
        if (!((k == 0 && l == 0) || (k == 3 && l == 3))) CHECK(w.mass(k, l) == 0.0);
  }

  TEST_CASE("0.75/0.25 diagonal criteria") {
    const Image img(2, 1, std::vector<double>{0.1, 0.9});
    const FocusMap f(Grid<double>(2, 1, std::vector<double>{0.75, 0.25}));
    const auto v = criteria_from_histogram(accumulate_joint(img, img, AffineTransform::identity(), BinningScheme(4), f));
    CHECK(v.h_joint == doctest::Approx(0.5623351446188083).epsilon(1e-14));
    CHECK(v.h_ref == v.h_joint);
    CHECK(v.h_test == v.h_joint);
    CHECK(v.nmi == 2.0);
    CHECK(v.ecc == 1.0);
    CHECK(v.mi == v.h_ref);
  }

  TEST_CASE("random cases match the naive pixel loop cell-exactly") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
      const Image u = random_image(8, 8, rng), v = random_image(8, 8, rng);
      const AffineTransform t = small_affine(rng);
      const int K = 4 + trial % 13;
      const FocusMap focus(random_image(8, 8, rng).grid());
      const bool weighted = trial % 3 == 0;
      const auto oracle = naive_joint(u, v, t, K, weighted ? &focus : nullptr);
      const auto h = weighted ? accumulate_joint(u, v, t, BinningScheme(K), focus)
                              : accumulate_joint(u, v, t, BinningScheme(K));
      CHECK(h.overlap_count() == oracle.count);
      for (int k = 0; k < K; ++k) {
        for (int l = 0; l < K; ++l) {
          const auto it = oracle.cells.find({k, l});
          CHECK(h.mass(k, l) == (it == oracle.cells.end() ? 0.0 : it->second));
        }
      }
    }
  }

  TEST_CASE("marginals and normalization invariants") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
      const Image u = random_image(20, 14, rng), v = random_image(20, 14, rng);
      const FocusMap focus(random_image(20, 14, rng).grid());
      const auto h = accumulate_joint(u, v, small_affine(rng), BinningScheme(16), focus);
      const auto rows = h.row_marginal(), cols = h.col_marginal();
      double total_pi = 0.0;
      for (int k = 0; k < 16; ++k) {
        double r = 0.0, c = 0.0;
        for (int l = 0; l < 16; ++l) {
          r += h.mass(k, l);
          c += h.mass(l, k);
          total_pi += h.mass(k, l) / h.total();
        }
        CHECK(std::abs(rows[k] - r) <= 1e-12);
        CHECK(std::abs(cols[k] - c) <= 1e-12);
      }
      CHECK(std::abs(total_pi - 1.0) <= 1e-12);
      CHECK(h.total() > 0.0);
    }
  }

  TEST_CASE("row partitions merge to the one-pass histogram exactly") {
    std::mt19937 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
      const Image u = random_image(24, 19, rng), v = random_image(24, 19, rng);
      // Integer shifts with dyadic weights keep every partial sum exact.
      std::uniform_int_distribution<int> shift(-3, 3);
      const AffineTransform t = AffineTransform::translation(shift(rng), shift(rng));
      Grid<double> w(24, 19);
      std::uniform_int_distribution<int> q(0, 8);
      for (double& x : w.values()) x = q(rng) / 8.0;
      w(0, 0) = 1.0;
      const FocusMap focus(std::move(w));
      const BinningScheme scheme(12);
      for (const FocusMap* f : {static_cast<const FocusMap*>(nullptr), &focus}) {
        const auto whole = accumulate_joint_rows(u, v, t, scheme, f, 0, 19);
        std::uniform_int_distribution<int> cut(0, 19);
        int a = cut(rng), b = cut(rng);
        if (a > b) std::swap(a, b);
        auto left = accumulate_joint_rows(u, v, t, scheme, f, 0, a);
        const auto mid = accumulate_joint_rows(u, v, t, scheme, f, a, b);
        const auto right = accumulate_joint_rows(u, v, t, scheme, f, b, 19);
        auto first = left;
        first.merge(mid).merge(right);
        auto grouped = mid;
        grouped.merge(right);
        left.merge(grouped);
        CHECK(same_cells(first, whole));
        CHECK(same_cells(left, whole));
        CHECK(first.overlap_count() == whole.overlap_count());
      }
    }
  }

  TEST_CASE("empty overlap and vanishing focus") {
    const Image img(6, 6, 0.5);
    CHECK_ERROR_KIND(accumulate_joint(img, img, AffineTransform::translation(20, 0), BinningScheme()),
                     ErrorKind::kEmptyOverlap);
    Grid<double> w(6, 6);
    w(5, 5) = 1.0;
    const FocusMap corner(std::move(w));
    CHECK_ERROR_KIND(accumulate_joint(img, img, AffineTransform::translation(-3, -3), BinningScheme(), corner),
                     ErrorKind::kEmptyOverlap);
    CHECK_ERROR_KIND(accumulate_joint(img, Image(5, 6, 0.5), AffineTransform::identity(), BinningScheme(),
                                      FocusMap::uniform(5, 6)),
                     ErrorKind::kInput);
  }

  TEST_CASE("text export has K rows of K masses, row = reference bin") {
    const Image ref(2, 1, std::vector<double>{0.1, 0.9});
    const Image test(2, 1, std::vector<double>{0.9, 0.9});
    const auto h = accumulate_joint(ref, test, AffineTransform::identity(), BinningScheme(3));
    std::ostringstream out;
    h.write_text(out);
    CHECK(out.str() == "0 0 1\n0 0 0\n0 0 1\n");
  }
}

TEST_SUITE("criteria") {
  TEST_CASE("identical images: MI = H, NMI = 2, ECC = 1") {
    std::mt19937 rng(17);
    const Image img = random_image(16, 16, rng);
    const auto v = criteria_from_histogram(accumulate_joint(img, img, AffineTransform::identity(), BinningScheme()));
    CHECK(v.nmi == 2.0);
    CHECK(v.ecc == 1.0);
    CHECK(v.mi == v.h_ref);
    CHECK(evaluate_criterion(img, img, AffineTransform::identity(), BinningScheme(), Criterion::kNMI) == 2.0);
  }

  TEST_CASE("factorizing histogram: MI = 0, NMI = 1, ECC = 0") {
    // Reference varies along x only, test along y only: a product table.
    Grid<double> a(4, 4), b(4, 4);
    for (int y = 0; y < 4; ++y)
      for (int x = 0; x < 4; ++x) {
        a(x, y) = (x + 0.5) / 4.0;
        b(x, y) = (y + 0.5) / 4.0;
      }
    const auto v = criteria_from_histogram(
        accumulate_joint(Image(std::move(a)), Image(std::move(b)), AffineTransform::identity(), BinningScheme(4)));
    CHECK(std::abs(v.mi) <= 1e-15);
    CHECK(v.nmi == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(v.ecc) <= 1e-15);
  }

  TEST_CASE("single occupied cell is degenerate with MI context 0") {
    const Image flat(5, 5, 0.4);
    bool caught = false;
    try {
      (void)criteria_from_histogram(accumulate_joint(flat, flat, AffineTransform::identity(), BinningScheme()));
    } catch (const DegenerateHistogramError& e) {
      caught = true;
      CHECK(e.mi() == 0.0);
      CHECK(e.kind() == ErrorKind::kDegenerateHistogram);
    }
    CHECK(caught);
  }

  TEST_CASE("16x16 random MI matches the naive recomputation") {
    std::mt19937 rng(18);
    const Image u = random_image(16, 16, rng), v = random_image(16, 16, rng);
    const AffineTransform t(1.03, -0.02, 0.04, 0.97, 0.6, -0.3);
    const auto oracle = naive_criteria(naive_joint(u, v, t, 64, nullptr), 64);
    const auto got = criteria_from_histogram(accumulate_joint(u, v, t, BinningScheme()));
    CHECK(std::abs(got.mi - oracle.mi) <= 1e-12);
    CHECK(std::abs(got.nmi - oracle.nmi) <= 1e-12);
    CHECK(std::abs(got.ecc - oracle.ecc) <= 1e-12);
    CHECK(evaluate_criterion(u, v, t, BinningScheme(), Criterion::kMI) == got.mi);
  }

  TEST_CASE("value bounds and identities on random pairs") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
      const Image u = random_image(12, 12, rng);
      Grid<double> g = u.grid();
      std::uniform_real_distribution<double> noise(-0.2, 0.2);
      for (double& x : g.values()) x = std::clamp(x + noise(rng), 0.0, 1.0);
      const Image v(std::move(g));
      const FocusMap focus(random_image(12, 12, rng).grid());
      const auto c = criteria_from_histogram(accumulate_joint(u, v, small_affine(rng), BinningScheme(8), focus));
      CHECK(std::abs(c.mi - (c.h_ref + c.h_test - c.h_joint)) <= 1e-12);
      CHECK(std::abs(c.ecc - 2 * c.mi / (c.h_ref + c.h_test)) <= 1e-12);
      CHECK(std::max(c.h_ref, c.h_test) <= c.h_joint + 1e-9);
      CHECK(c.h_joint <= c.h_ref + c.h_test + 1e-9);
      CHECK(c.nmi >= 1.0 - 1e-12);
      CHECK(c.nmi <= 2.0 + 1e-12);
    }
  }

  TEST_CASE("constant focus reproduces the unweighted criteria") {
    std::mt19937 rng(20);
    for (double level : {1.0, 0.001, 7.5}) {
      const Image u = random_image(16, 16, rng), v = random_image(16, 16, rng);
      const AffineTransform t = small_affine(rng);
      const FocusMap constant(Grid<double>(16, 16, level));
      for (Criterion c : {Criterion::kMI, Criterion::kNMI, Criterion::kECC}) {
        const double a = evaluate_criterion(u, v, t, BinningScheme(), c);
        const double b = evaluate_criterion(u, v, t, BinningScheme(), constant, c);
        CHECK(std::abs(a - b) <= 1e-12);
      }
    }
  }

  TEST_CASE("scaling focus weights leaves every criterion unchanged") {
    std::mt19937 rng(21);
    const Image u = random_image(16, 16, rng), v = random_image(16, 16, rng);
    const AffineTransform t = small_affine(rng);
    const Image w = random_image(16, 16, rng);
    Grid<double> scaled = w.grid();
    for (double& x : scaled.values()) x *= 37.0;
    const FocusMap f1(w.grid()), f2(std::move(scaled));
    for (Criterion c : {Criterion::kMI, Criterion::kNMI, Criterion::kECC}) {
      CHECK(std::abs(evaluate_criterion(u, v, t, BinningScheme(), f1, c) -
                     evaluate_criterion(u, v, t, BinningScheme(), f2, c)) <= 1e-12);
      CHECK(std::abs(evaluate_criterion(u, v, t, BinningScheme(), f1, c) -
                     evaluate_criterion(u, v, t, BinningScheme(), f1.normalized(), c)) <= 1e-12);
    }
  }

  TEST_CASE("consistent relabeling of one image's bins is exact") {
    std::mt19937 rng(22);
    const int K = 16;
    for (int trial = 0; trial < 10; ++trial) {
      const Image u = quantize(random_image(16, 16, rng), K);
      const Image v = quantize(random_image(16, 16, rng), K);
      std::vector<int> perm(K);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Image pv = relabel(v, perm, K);
      const FocusMap focus(random_image(16, 16, rng).grid());
      // Integer translations keep reference samples at pixel centers, so
      // the test bins are the only thing the permutation touches.
      const AffineTransform t = AffineTransform::translation(trial % 3, -(trial % 2));
      const auto a = criteria_from_histogram(accumulate_joint(u, v, t, BinningScheme(K), focus));
      const auto b = criteria_from_histogram(accumulate_joint(u, pv, t, BinningScheme(K), focus));
      CHECK(a.mi == b.mi);
      CHECK(a.nmi == b.nmi);
      CHECK(a.ecc == b.ecc);
    }
  }

  TEST_CASE("NMI is 2 on every crop of an identical pair while MI varies") {
    const Image base = render(textured_field(5), 64, 64);
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> side(4, 60);
    double lo = 1e9, hi = -1e9;
    for (int i = 0; i < 30; ++i) {
      const int w = side(rng), h = side(rng);
      Grid<double> g(w, h);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) g(x, y) = base(x + (64 - w) / 2, y + (64 - h) / 3);
      const Image crop(std::move(g));
      try {
        const auto v = criteria_from_histogram(accumulate_joint(crop, crop, AffineTransform::identity(), BinningScheme()));
        CHECK(v.nmi == 2.0);
        lo = std::min(lo, v.mi);
        hi = std::max(hi, v.mi);
      } catch (const DegenerateHistogramError&) {
      }
    }
    CHECK(hi - lo > 0.1);
  }

  TEST_CASE("criterion names") {
    CHECK(parse_criterion("nmi") == Criterion::kNMI);
    CHECK(parse_criterion("MI") == Criterion::kMI);
    CHECK(parse_criterion("Ecc") == Criterion::kECC);
    CHECK(std::string(to_string(Criterion::kECC)) == "ECC");
    CHECK_ERROR_KIND(parse_criterion("KL"), ErrorKind::kInput);
  }
}
