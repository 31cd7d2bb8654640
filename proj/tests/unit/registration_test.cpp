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

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <doctest.h>

#include <fmireg/criteria.hpp>
#include <fmireg/registration.hpp>

#include "oracles.hpp"
#include "phantoms.hpp"
#include "test_util.hpp"

using namespace fmireg;
using namespace fmireg::testing;

namespace {

bool in_box(const AffineTransform& t, const SearchSpec& spec) {
  const auto p = parameterize(t), c = parameterize(spec.initial);
  for (int i = 0; i < 6; ++i)
    if (std::abs(p[i] - c[i]) > spec.half_widths[i] * (1 + 1e-12)) return false;
  return true;
}

bool same_result(const RegistrationResult& a, const RegistrationResult& b) {
  if (a.best != b.best || a.best_value != b.best_value || a.evaluations != b.evaluations ||
      a.overlap_fraction != b.overlap_fraction || a.trace.size() != b.trace.size())
    return false;
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    if (a.trace[i].parameters != b.trace[i].parameters || a.trace[i].value != b.trace[i].value) return false;
  return true;
}

}  // namespace

TEST_SUITE("search spec") {
  TEST_CASE("defaults and validation") {
    const SearchSpec spec;
    CHECK(spec.half_widths == std::array<double, 6>{0.15, 0.15, 0.15, 0.15, 20, 20});
    CHECK(spec.criterion == Criterion::kNMI);
    CHECK(spec.restarts == 3);
    CHECK(spec.max_evals == 2000);
    CHECK(spec.tolerance == 1e-6);
    CHECK_NOTHROW(spec.validate());
    SearchSpec bad = spec;
    bad.half_widths[2] = -1;
    CHECK_ERROR_KIND(bad.validate(), ErrorKind::kInput);
    bad = spec;
    bad.max_evals = 0;
    CHECK_ERROR_KIND(bad.validate(), ErrorKind::kInput);
    bad = spec;
    bad.tolerance = 0;
    CHECK_ERROR_KIND(bad.validate(), ErrorKind::kInput);
    bad = spec;
    bad.restarts = -1;
    CHECK_ERROR_KIND(bad.validate(), ErrorKind::kInput);
  }
}

TEST_SUITE("register") {
  TEST_CASE("identical images converge to identity with NMI 2") {
    const Image img = render(textured_field(40), 64, 64);
    SearchSpec spec;
    spec.half_widths = SearchSpec::box(0.05, 3.0);
    const auto r = register_images(img, img, nullptr, spec);
    const auto p = r.best.parameters();
    CHECK(std::abs(p[0] - 1) <= 1e-3);
    CHECK(std::abs(p[1]) <= 1e-3);
    CHECK(std::abs(p[2]) <= 1e-3);
    CHECK(std::abs(p[3] - 1) <= 1e-3);
    CHECK(std::abs(p[4]) <= 0.1);
    CHECK(std::abs(p[5]) <= 0.1);
    CHECK(std::abs(r.best_value - 2.0) <= 1e-6);
    CHECK(r.overlap_fraction > 0.95);
  }

  TEST_CASE("integer translation is recovered within 0.25 px") {
    const Field f = textured_field(41);
    const AffineTransform truth = AffineTransform::translation(7, -4);
    const Image ref = render(f, 96, 96);
    const Image test = render(f, 96, 96, truth);
    const auto r = register_images(ref, test, nullptr, SearchSpec{});
    CHECK(std::abs(r.best.tx() - 7) <= 0.25);
    CHECK(std::abs(r.best.ty() + 4) <= 0.25);
    CHECK(mean_corner_error(r.best, truth, image_corners(96, 96)) <= 0.5);
  }

  TEST_CASE("result invariants: box, recomputed value, trace, determinism") {
    const Field f = textured_field(42);
    const Image ref = render(f, 64, 64);
    const Image test = render(f, 64, 64, AffineTransform(1.02, 0.01, -0.02, 0.99, 2.5, -1.5));
    std::mt19937 rng(43);
    const FocusMap focus(random_image(64, 64, rng).grid());
    SearchSpec spec;
    spec.max_evals = 300;
    for (const FocusMap* fp : {static_cast<const FocusMap*>(nullptr), &focus}) {
      const auto a = register_images(ref, test, fp, spec);
      const auto b = register_images(ref, test, fp, spec);
      CHECK(same_result(a, b));
      CHECK(in_box(a.best, spec));
      CHECK(a.evaluations == a.trace.size());
      CHECK(a.evaluations <= std::size_t(spec.max_evals) * (spec.restarts + 1));
      const double recomputed = fp ? evaluate_criterion(ref, test, a.best, BinningScheme(), *fp, spec.criterion)
                                   : evaluate_criterion(ref, test, a.best, BinningScheme(), spec.criterion);
      CHECK(std::abs(recomputed - a.best_value) <= 1e-12);
      double running = -std::numeric_limits<double>::infinity(), top = running;
      for (const auto& e : a.trace) {
        const double next = std::max(running, e.value);
        CHECK(next >= running);
        running = next;
        top = std::max(top, e.value);
        CHECK(in_box(deparameterize(e.parameters), spec));
      }
      CHECK(top == a.best_value);
      // The first maximal entry of the trace is the one reported.
      for (const auto& e : a.trace) {
        if (e.value == a.best_value) {
          CHECK(deparameterize(e.parameters) == a.best);
          break;
        }
      }
    }
  }

  TEST_CASE("all criteria and restart counts run") {
    const Field f = textured_field(44);
    const Image ref = render(f, 48, 48);
    const Image test = render(f, 48, 48, AffineTransform::translation(1.5, 0.5));
    for (Criterion c : {Criterion::kMI, Criterion::kNMI, Criterion::kECC}) {
      SearchSpec spec;
      spec.criterion = c;
      spec.restarts = 0;
      spec.half_widths = SearchSpec::box(0.0, 4.0);
      const auto r = register_images(ref, test, nullptr, spec);
      CHECK(std::abs(r.best.tx() - 1.5) <= 0.25);
      CHECK(std::abs(r.best.ty() - 0.5) <= 0.25);
      // Zero half widths pin the matrix.
      CHECK(r.best.a11() == 1.0);
      CHECK(r.best.a12() == 0.0);
    }
  }

  TEST_CASE("seed changes only the restart points") {
    const Field f = textured_field(45);
    const Image ref = render(f, 48, 48);
    const Image test = render(f, 48, 48, AffineTransform::translation(1, 1));
    SearchSpec spec;
    spec.max_evals = 60;
    const auto a = register_images(ref, test, nullptr, spec);
    spec.seed = 9;
    const auto b = register_images(ref, test, nullptr, spec);
    // The first run starts at the initial guess either way.
    CHECK(a.trace.front().parameters == b.trace.front().parameters);
    CHECK_FALSE(same_result(a, b));
  }

  TEST_CASE("relabeling the test bins leaves the whole trajectory unchanged") {
    const int K = 32;
    std::mt19937 rng(46);
    const Image ref = render(textured_field(47), 48, 48);
    const Image raw = render(textured_field(47), 48, 48, AffineTransform::translation(1.3, -0.7));
    std::vector<int> perm(K);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Grid<double> a(48, 48), b(48, 48);
    for (int y = 0; y < 48; ++y)
      for (int x = 0; x < 48; ++x) {
        const int k = naive_bin(raw(x, y), K);
        a(x, y) = (k + 0.5) / K;
        b(x, y) = (perm[k] + 0.5) / K;
      }
    SearchSpec spec;
    spec.max_evals = 200;
    spec.restarts = 1;
    const FocusMap focus(random_image(48, 48, rng).grid());
    const auto ra = register_images(ref, Image(a), &focus, spec, BinningScheme(K));
    const auto rb = register_images(ref, Image(b), &focus, spec, BinningScheme(K));
    CHECK(same_result(ra, rb));
  }

  TEST_CASE("focus on the fixed structure aligns it, uniform focus follows the larger one") {
    const TwoStructurePhantom p;
    const Image ref = render(p.field(0, 0), 128, 128);
    const Image test = render(p.field(6, 0), 128, 128);
    BinaryMask b_mask(128, 128);
    for (int y = int(p.b_y0) - 3; y <= int(p.b_y0 + p.b_size) + 3; ++y)
      for (int x = int(p.b_x0) - 3; x <= int(p.b_x0 + p.b_size) + 3; ++x) b_mask(x, y) = 1;
    const FocusMap focus = mask_multiply(FocusMap::uniform(128, 128), b_mask).normalized();
    const auto focused = register_images(ref, test, &focus, SearchSpec{});
    const auto uniform = register_images(ref, test, nullptr, SearchSpec{});
    const AffineTransform id;
    CHECK(mean_corner_error(focused.best, id, p.b_corners()) < 0.5);
    CHECK(mean_corner_error(uniform.best, id, p.b_corners()) > 2.0);
  }

  TEST_CASE("overlap guard and failure") {
    const Image img = render(textured_field(48), 32, 32);
    SearchSpec spec;
    spec.initial = AffineTransform::translation(100, 0);
    spec.half_widths = SearchSpec::box(0.01, 2.0);
    CHECK_ERROR_KIND(register_images(img, img, nullptr, spec), ErrorKind::kRegistrationFailed);
    // A sliver of overlap below the guard is also invalid.
    spec.initial = AffineTransform::translation(31, 0);
    spec.half_widths = SearchSpec::box(0.0, 0.0);
    spec.min_overlap_fraction = 0.05;
    CHECK_ERROR_KIND(register_images(img, img, nullptr, spec), ErrorKind::kRegistrationFailed);
    spec.min_overlap_fraction = 0.0;
    spec.restarts = 0;
    spec.initial = AffineTransform::translation(30, 0);
    const auto r = register_images(img, img, nullptr, spec);
    CHECK(r.overlap_fraction == doctest::Approx(2.0 / 32.0));
    CHECK(r.evaluations == 1);
    const FocusMap wrong_shape = FocusMap::uniform(8, 8);
    CHECK_ERROR_KIND(register_images(img, img, &wrong_shape, SearchSpec{}), ErrorKind::kInput);
  }

  TEST_CASE("trace export") {
    const Image img = render(textured_field(49), 24, 24);
    SearchSpec spec;
    spec.max_evals = 5;
    spec.restarts = 0;
    const auto r = register_images(img, img, nullptr, spec);
    std::ostringstream out;
    write_trace(out, r);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "iteration a11 a12 a21 a22 tx ty value");
    int rows = 0;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      int it;
      std::array<double, 6> p;
      double v;
      fields >> it >> p[0] >> p[1] >> p[2] >> p[3] >> p[4] >> p[5] >> v;
      CHECK(it == rows);
      CHECK(p == r.trace[rows].parameters);
      CHECK(v == r.trace[rows].value);
      ++rows;
    }
    CHECK(rows == 5);
  }
}

TEST_SUITE("multiresolution") {
  TEST_CASE("downsampling averages 2x2 blocks and drops odd edges") {
    Grid<double> g(5, 3);
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < 5; ++x) g(x, y) = 0.1 * x + 0.01 * y;
    const Grid<double> d = downsample(g);
    CHECK(d.width() == 2);
    CHECK(d.height() == 1);
    CHECK(d(0, 0) == doctest::Approx(0.055));
    CHECK(d(1, 0) == doctest::Approx(0.255));
    CHECK_ERROR_KIND(downsample(Grid<double>(1, 4, 0.5)), ErrorKind::kTooSmall);
  }

  TEST_CASE("level mapping round trips and commutes with block averaging") {
    std::mt19937 rng(50);
    std::uniform_real_distribution<double> m(-0.1, 0.1), t(-10, 10);
    for (int i = 0; i < 50; ++i) {
      const AffineTransform a(1 + m(rng), m(rng), m(rng), 1 + m(rng), t(rng), t(rng));
      for (int level = 0; level < 4; ++level) {
        const auto b = transform_from_level(transform_to_level(a, level), level).parameters();
        const auto c = a.parameters();
        for (int k = 0; k < 6; ++k) CHECK(std::abs(b[k] - c[k]) <= 1e-9);
      }
    }
    // A level-1 pixel center sits at the middle of its 2x2 block.
    const AffineTransform shift = AffineTransform::translation(4, -2);
    const Point p = transform_to_level(shift, 1).apply(3, 5);
    const Point q = shift.apply(2 * 3 + 0.5, 2 * 5 + 0.5);
    CHECK(p.x == doctest::Approx((q.x - 0.5) / 2));
    CHECK(p.y == doctest::Approx((q.y - 0.5) / 2));
  }

  TEST_CASE("one level is plain registration") {
    const Field f = textured_field(51);
    const Image ref = render(f, 48, 48), test = render(f, 48, 48, AffineTransform::translation(2, 1));
    SearchSpec spec;
    spec.max_evals = 200;
    CHECK(same_result(multiresolution_register(ref, test, nullptr, spec, BinningScheme(), 1),
                      register_images(ref, test, nullptr, spec)));
    CHECK_ERROR_KIND(multiresolution_register(ref, test, nullptr, spec, BinningScheme(), 0), ErrorKind::kInput);
  }

  TEST_CASE("identical images stay at identity for any depth") {
    const Image img = render(textured_field(52), 96, 96);
    SearchSpec spec;
    spec.half_widths = SearchSpec::box(0.05, 4.0);
    for (int levels : {2, 3}) {
      const auto r = multiresolution_register(img, img, nullptr, spec, BinningScheme(), levels);
      CHECK(std::abs(r.best.tx()) <= 0.1);
      CHECK(std::abs(r.best.ty()) <= 0.1);
      CHECK(std::abs(r.best.a11() - 1) <= 1e-3);
      CHECK(std::abs(r.best.a22() - 1) <= 1e-3);
      CHECK(std::abs(r.best_value - 2.0) <= 1e-6);
    }
  }

  TEST_CASE("20 px shift recovered through three levels of an 8 px box") {
    const Field f = smooth_field(53);
    const AffineTransform truth = AffineTransform::translation(20, -12);
    const Image ref = render(f, 128, 128), test = render(f, 128, 128, truth);
    SearchSpec spec;
    spec.half_widths = SearchSpec::box(0.05, 8.0);
    const auto r = multiresolution_register(ref, test, nullptr, spec, BinningScheme(), 3);
    CHECK(std::abs(r.best.tx() - 20) <= 0.25);
    CHECK(std::abs(r.best.ty() + 12) <= 0.25);
    // A single level cannot reach it.
    const auto single = register_images(ref, test, nullptr, spec);
    CHECK(std::abs(single.best.tx() - 20) > 1.0);
  }

  TEST_CASE("focus maps are carried down the pyramid") {
    const Field f = textured_field(54);
    const Image ref = render(f, 64, 64), test = render(f, 64, 64, AffineTransform::translation(3, 2));
    Grid<double> w(64, 64);
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x) w(x, y) = std::exp(-((x - 32.0) * (x - 32.0) + (y - 32.0) * (y - 32.0)) / 288.0);
    const FocusMap focus(std::move(w));
    const auto r = multiresolution_register(ref, test, &focus, SearchSpec{}, BinningScheme(), 2);
    CHECK(std::abs(r.best.tx() - 3) <= 0.25);
    CHECK(std::abs(r.best.ty() - 2) <= 0.25);
  }
}
