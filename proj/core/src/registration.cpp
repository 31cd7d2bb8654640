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

#include "fmireg/registration.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "fmireg/error.hpp"
#include "fmireg/joint_histogram.hpp"

namespace fmireg {

namespace {

constexpr double kInvalid = -std::numeric_limits<double>::infinity();
constexpr int kParams = 6;
using Params = std::array<double, kParams>;

double radical_inverse(unsigned index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * (index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

/// Criterion at one parameter vector; -inf when the trial is unusable.
class Objective {
 public:
  Objective(const Image& reference, const Image& test, const FocusMap* focus,
            const SearchSpec& spec, const BinningScheme& scheme)
      : reference_(reference), test_(test), focus_(focus), spec_(spec), scheme_(scheme) {}

  struct Outcome {
    double value = kInvalid;
    double overlap_fraction = 0.0;
  };

  Outcome operator()(const Params& p) const {
    Outcome out;
    AffineTransform t;
    try {
      t = deparameterize(p);
    } catch (const Error&) {
      return out;
    }
    const JointHistogram h =
        accumulate_joint_rows(reference_, test_, t, scheme_, focus_, 0, test_.height());
    out.overlap_fraction =
        static_cast<double>(h.overlap_count()) / static_cast<double>(test_.pixel_count());
    if (h.overlap_count() == 0 || out.overlap_fraction < spec_.min_overlap_fraction) return out;
    if (!(h.total() > 0.0)) return out;
    try {
      const double v = criteria_from_histogram(h).select(spec_.criterion);
      if (!std::isfinite(v)) throw Error(ErrorKind::kInternal, "non-finite criterion value");
      out.value = v;
    } catch (const DegenerateHistogramError&) {
    }
    return out;
  }

 private:
  const Image& reference_;
  const Image& test_;
  const FocusMap* focus_;
  const SearchSpec& spec_;
  const BinningScheme& scheme_;
};

/// One box-clamped Nelder-Mead run maximizing the objective over the free
/// parameters (those with a positive half width).
class SimplexRun {
 public:
  SimplexRun(const Objective& objective, const SearchSpec& spec, const Params& center)
      : objective_(objective), spec_(spec), center_(center) {
    for (int i = 0; i < kParams; ++i) {
      if (spec.half_widths[i] > 0.0) free_.push_back(i);
    }
  }

  /// Repeats the simplex descent from the best point found so far until a
  /// fresh simplex no longer improves it by more than the tolerance. A
  /// collapsed simplex on a ridge gets a full-size one again this way.
  std::vector<TraceEntry> run(const Params& start) {
    trace_.clear();
    Vertex best = make_vertex(start);
    for (;;) {
      const Vertex next = descend(best);
      const bool improved = next.value != kInvalid &&
                            (best.value == kInvalid || next.value - best.value > spec_.tolerance);
      if (next.value > best.value) best = next;
      if (!improved || !budget_left()) break;
    }
    return trace_;
  }

 private:
  struct Vertex {
    Params p;
    double value;
    std::size_t seq;
  };

  Vertex descend(const Vertex& first) {
    const Params& start = first.p;
    const int n = static_cast<int>(free_.size());
    std::vector<Vertex> simplex{first};
    for (int j = 0; j < n && budget_left(); ++j) {
      const int i = free_[j];
      Params p = start;
      const double step = std::max(0.1 * spec_.half_widths[i], 1e-3);
      p[i] = start[i] + step;
      if (p[i] > hi(i)) p[i] = start[i] - step;
      simplex.push_back(make_vertex(clamp(p)));
    }
    const auto order = [](const Vertex& a, const Vertex& b) {
      return a.value > b.value || (a.value == b.value && a.seq < b.seq);
    };
    if (n == 0 || static_cast<int>(simplex.size()) < n + 1) {
      return *std::min_element(simplex.begin(), simplex.end(), order);
    }

    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
    while (budget_left()) {
      // Best first; among equal values the earlier evaluation wins.
      std::sort(simplex.begin(), simplex.end(), order);
      const Vertex& best = simplex.front();
      const Vertex& worst = simplex.back();
      if (best.value == kInvalid) break;
      if (worst.value != kInvalid && best.value - worst.value <= spec_.tolerance) break;
      if (diameter(simplex) < 1e-12) break;

      Params centroid{};
      for (int v = 0; v < n; ++v) {
        for (int i : free_) centroid[i] += simplex[v].p[i] / n;
      }
      for (int i = 0; i < kParams; ++i) {
        if (spec_.half_widths[i] <= 0.0) centroid[i] = start[i];
      }
      auto along = [&](const Params& from, double coef) {
        Params p = centroid;
        for (int i : free_) p[i] = centroid[i] + coef * (from[i] - centroid[i]);
        return clamp(p);
      };

      const Vertex reflected = make_vertex(along(worst.p, -kReflect));
      if (reflected.value > best.value) {
        if (!budget_left()) {
          simplex.back() = reflected;
          break;
        }
        Params expanded_p = centroid;
        for (int i : free_) expanded_p[i] = centroid[i] + kExpand * (reflected.p[i] - centroid[i]);
        const Vertex expanded = make_vertex(clamp(expanded_p));
        simplex.back() = expanded.value > reflected.value ? expanded : reflected;
        continue;
      }
      if (reflected.value > simplex[n - 1].value) {
        simplex.back() = reflected;
        continue;
      }
      if (!budget_left()) break;
      if (reflected.value > worst.value) {
        Params outside = centroid;
        for (int i : free_) outside[i] = centroid[i] + kContract * (reflected.p[i] - centroid[i]);
        const Vertex contracted = make_vertex(clamp(outside));
        if (contracted.value >= reflected.value) {
          simplex.back() = contracted;
          continue;
        }
      } else {
        const Vertex contracted = make_vertex(along(worst.p, kContract));
        if (contracted.value > worst.value) {
          simplex.back() = contracted;
          continue;
        }
      }
      for (int v = 1; v <= n && budget_left(); ++v) {
        Params p = simplex[v].p;
        for (int i : free_) p[i] = simplex[0].p[i] + kShrink * (p[i] - simplex[0].p[i]);
        simplex[v] = make_vertex(clamp(p));
      }
    }
    return *std::min_element(simplex.begin(), simplex.end(), order);
  }

  double lo(int i) const { return center_[i] - spec_.half_widths[i]; }
  double hi(int i) const { return center_[i] + spec_.half_widths[i]; }

  Params clamp(Params p) const {
    for (int i = 0; i < kParams; ++i) p[i] = std::clamp(p[i], lo(i), hi(i));
    return p;
  }

  bool budget_left() const { return static_cast<int>(trace_.size()) < spec_.max_evals; }

  Vertex make_vertex(const Params& p) {
    const double v = objective_(p).value;
    trace_.push_back({p, v});
    return {p, v, trace_.size() - 1};
  }

  double diameter(const std::vector<Vertex>& simplex) const {
    double d = 0.0;
    for (const Vertex& v : simplex) {
      for (int i : free_) {
        d = std::max(d, std::abs(v.p[i] - simplex.front().p[i]) / spec_.half_widths[i]);
      }
    }
    return d;
  }

  const Objective& objective_;
  const SearchSpec& spec_;
  Params center_;
  std::vector<int> free_;
  std::vector<TraceEntry> trace_;
};

}  // namespace

void SearchSpec::validate() const {
  for (double w : half_widths) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorKind::kInput, "half widths must be finite and >= 0");
  }
  if (max_evals < 1) throw Error(ErrorKind::kInput, "max_evals must be >= 1");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::kInput, "tolerance must be > 0");
  if (restarts < 0) throw Error(ErrorKind::kInput, "restarts must be >= 0");
  if (!(min_overlap_fraction >= 0.0 && min_overlap_fraction <= 1.0)) {
    throw Error(ErrorKind::kInput, "min_overlap_fraction must lie in [0,1]");
  }
}

RegistrationResult register_images(const Image& reference, const Image& test,
                                   const FocusMap* focus, const SearchSpec& spec,
                                   const BinningScheme& scheme) {
  spec.validate();
  if (focus && (focus->width() != reference.width() || focus->height() != reference.height())) {
    throw Error(ErrorKind::kInput, "focus map must match the reference image shape");
  }
  const Objective objective(reference, test, focus, spec, scheme);
  const Params center = parameterize(spec.initial);

  std::vector<Params> starts{center};
  static constexpr std::array<unsigned, kParams> kPrimes{2, 3, 5, 7, 11, 13};
  for (int r = 0; r < spec.restarts; ++r) {
    Params p = center;
    const unsigned index = spec.seed + static_cast<unsigned>(r) + 1;
    for (int i = 0; i < kParams; ++i) {
      p[i] = center[i] + (2.0 * radical_inverse(index, kPrimes[i]) - 1.0) * spec.half_widths[i];
    }
    starts.push_back(p);
  }

  // Runs are independent; results are merged in start order.
  std::vector<std::future<std::vector<TraceEntry>>> runs;
  for (const Params& s : starts) {
    runs.push_back(std::async(std::launch::async, [&objective, &spec, &center, s] {
      return SimplexRun(objective, spec, center).run(s);
    }));
  }

  RegistrationResult result;
  for (auto& run : runs) {
    auto part = run.get();
    result.trace.insert(result.trace.end(), part.begin(), part.end());
  }
  result.evaluations = result.trace.size();

  const TraceEntry* best = nullptr;
  for (const TraceEntry& e : result.trace) {
    if (e.value != kInvalid && (!best || e.value > best->value)) best = &e;
  }
  if (!best) {
    throw Error(ErrorKind::kRegistrationFailed,
                "no transform in the search box gives a usable overlap");
  }
  result.best = deparameterize(best->parameters);
  result.best_value = best->value;
  result.overlap_fraction = objective(best->parameters).overlap_fraction;
  return result;
}

Grid<double> downsample(const Grid<double>& g) {
  if (g.width() < 2 || g.height() < 2) {
    throw Error(ErrorKind::kTooSmall, "cannot downsample below 1 pixel");
  }
  Grid<double> out(g.width() / 2, g.height() / 2);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      out(x, y) = 0.25 * (g(2 * x, 2 * y) + g(2 * x + 1, 2 * y) + g(2 * x, 2 * y + 1) +
                          g(2 * x + 1, 2 * y + 1));
    }
  }
  return out;
}

Image downsample(const Image& img) {
  Grid<double> g = downsample(img.grid());
  for (double& v : g.values()) v = std::clamp(v, 0.0, 1.0);
  return Image(std::move(g));
}

// Level coordinates relate to full resolution by x_full = s x + o with
// s = 2^level and o = (s - 1) / 2.
AffineTransform transform_to_level(const AffineTransform& t, int level) {
  const double s = std::ldexp(1.0, level);
  const double o = 0.5 * (s - 1.0);
  const Point ao = {t.a11() * o + t.a12() * o, t.a21() * o + t.a22() * o};
  return {t.a11(), t.a12(), t.a21(), t.a22(), (ao.x + t.tx() - o) / s, (ao.y + t.ty() - o) / s};
}

AffineTransform transform_from_level(const AffineTransform& t, int level) {
  const double s = std::ldexp(1.0, level);
  const double o = 0.5 * (s - 1.0);
  const Point ao = {t.a11() * o + t.a12() * o, t.a21() * o + t.a22() * o};
  return {t.a11(), t.a12(), t.a21(), t.a22(), s * t.tx() + o - ao.x, s * t.ty() + o - ao.y};
}

RegistrationResult multiresolution_register(const Image& reference, const Image& test,
                                            const FocusMap* focus, const SearchSpec& spec,
                                            const BinningScheme& scheme, int levels) {
  if (levels < 1) throw Error(ErrorKind::kInput, "levels must be >= 1");
  if (levels == 1) return register_images(reference, test, focus, spec, scheme);

  std::vector<Image> refs{reference}, tests{test};
  std::vector<FocusMap> foci;
  if (focus) foci.push_back(*focus);
  for (int l = 1; l < levels; ++l) {
    refs.push_back(downsample(refs.back()));
    tests.push_back(downsample(tests.back()));
    if (focus) foci.emplace_back(downsample(foci.back().weights()));
  }

  AffineTransform estimate = spec.initial;
  std::size_t evaluations = 0;
  RegistrationResult result;
  for (int l = levels - 1; l >= 0; --l) {
    SearchSpec level_spec = spec;
    level_spec.initial = transform_to_level(estimate, l);
    result = register_images(refs[l], tests[l], focus ? &foci[l] : nullptr, level_spec, scheme);
    evaluations += result.evaluations;
    estimate = transform_from_level(result.best, l);
  }
  result.evaluations = evaluations;
  return result;
}

void write_trace(std::ostream& out, const RegistrationResult& result) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "iteration a11 a12 a21 a22 tx ty value\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const auto& e = result.trace[i];
    out << i;
    for (double p : e.parameters) out << ' ' << p;
    out << ' ' << e.value << '\n';
  }
  out.precision(old);
}

}  // namespace fmireg
