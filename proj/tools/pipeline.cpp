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

#include "pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include <fmireg/image_io.hpp>
#include <fmireg/subtraction.hpp>
#include <fmireg/text_io.hpp>

namespace fmireg::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

Preset parse_preset(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "uniform") return Preset::kUniform;
  if (s == "restoration") return Preset::kRestoration;
  if (s == "implant") return Preset::kImplant;
  if (s == "bone") return Preset::kBone;
  if (s == "cephalo") return Preset::kCephalo;
  if (s == "gaussians") return Preset::kGaussians;
  if (s == "file") return Preset::kFile;
  throw Error(ErrorKind::kInput, "unknown preset '" + name + "'");
}

const char* to_string(Preset p) noexcept {
  switch (p) {
    case Preset::kUniform: return "uniform";
    case Preset::kRestoration: return "restoration";
    case Preset::kImplant: return "implant";
    case Preset::kBone: return "bone";
    case Preset::kCephalo: return "cephalo";
    case Preset::kGaussians: return "gaussians";
    case Preset::kFile: return "file";
  }
  return "?";
}

Preset PipelineConfig::effective_preset() const {
  if (preset) return *preset;
  return focus_file ? Preset::kFile : Preset::kUniform;
}

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

template <typename T>
void read_if(const json& j, const char* key, T& dst) {
  if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<T>();
}

void read_path(const json& j, const char* key, const fs::path& base, fs::path& dst) {
  if (j.contains(key) && !j.at(key).is_null()) dst = resolve(base, j.at(key).get<std::string>());
}

void read_path(const json& j, const char* key, const fs::path& base,
               std::optional<fs::path>& dst) {
  if (j.contains(key) && !j.at(key).is_null()) dst = resolve(base, j.at(key).get<std::string>());
}

}  // namespace

PipelineConfig parse_config(const std::string& json_text, const fs::path& base) {
  PipelineConfig c;
  try {
    const json j = json::parse(json_text);
    read_path(j, "reference", base, c.reference);
    read_path(j, "test", base, c.test);
    read_path(j, "focus", base, c.focus_file);
    read_path(j, "transform", base, c.transform);
    if (j.contains("preset")) c.preset = parse_preset(j.at("preset").get<std::string>());
    if (j.contains("criterion")) c.criterion = parse_criterion(j.at("criterion").get<std::string>());
    read_if(j, "bins", c.bins);
    read_if(j, "seed", c.seed);
    if (j.contains("points")) {
      read_path(j.at("points"), "reference", base, c.points_reference);
      read_path(j.at("points"), "test", base, c.points_test);
    }
    if (j.contains("curves")) {
      for (const auto& f : j.at("curves")) c.curve_files.push_back(resolve(base, f.get<std::string>()));
    }
    if (j.contains("gaussians")) {
      for (const auto& g : j.at("gaussians")) {
        c.gaussians.push_back({g.value("weight", 1.0), {g.at("x").get<double>(), g.at("y").get<double>()},
                               g.at("sigma").get<double>()});
      }
    }
    if (j.contains("focus_params")) {
      const json& f = j.at("focus_params");
      read_if(f, "median_radius", c.focus_params.median_radius);
      read_if(f, "sigma_edge", c.focus_params.sigma_edge);
      read_if(f, "sigma_spline", c.focus_params.sigma_spline);
      read_if(f, "close_radius", c.focus_params.close_radius);
      read_if(f, "dilate_radius", c.focus_params.dilate_radius);
      read_if(f, "otsu_bins", c.focus_params.otsu_bins);
      if (f.contains("threshold") && !f.at("threshold").is_null()) {
        c.focus_params.threshold = f.at("threshold").get<double>();
      }
    }
    if (j.contains("search")) {
      const json& s = j.at("search");
      read_if(s, "box_matrix", c.box_matrix);
      read_if(s, "box_translation", c.box_translation);
      read_if(s, "levels", c.levels);
      read_if(s, "restarts", c.restarts);
      read_if(s, "max_evals", c.max_evals);
      read_if(s, "tolerance", c.tolerance);
      read_if(s, "min_overlap", c.min_overlap);
    }
    if (j.contains("output")) {
      const json& o = j.at("output");
      read_path(o, "transform", base, c.out_transform);
      read_path(o, "focus", base, c.out_focus);
      read_path(o, "subtraction", base, c.out_subtraction);
      read_path(o, "trace", base, c.out_trace);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInput, std::string("bad config: ") + e.what());
  }
  return c;
}

PipelineConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInput, "cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

namespace {

Image load_required(const fs::path& path, const char* role) {
  if (path.empty()) throw Error(ErrorKind::kInput, std::string("missing --") + role + " image");
  return read_image(path);
}

std::vector<SplineCurve> load_curves(const PipelineConfig& c) {
  if (c.curve_files.empty()) throw Error(ErrorKind::kInput, "cephalo preset requires --curves");
  std::vector<SplineCurve> curves;
  for (const auto& f : c.curve_files) {
    auto part = read_curves(f);
    curves.insert(curves.end(), part.begin(), part.end());
  }
  return curves;
}

SearchSpec make_spec(const PipelineConfig& c, const AffineTransform& initial) {
  SearchSpec spec;
  spec.initial = initial;
  spec.half_widths = SearchSpec::box(c.box_matrix, c.box_translation);
  spec.criterion = c.criterion;
  spec.restarts = c.restarts;
  spec.max_evals = c.max_evals;
  spec.tolerance = c.tolerance;
  spec.seed = c.seed;
  spec.min_overlap_fraction = c.min_overlap;
  spec.validate();
  return spec;
}

AffineTransform initial_guess(const PipelineConfig& c) {
  if (c.points_reference || c.points_test) {
    if (!c.points_reference || !c.points_test) {
      throw Error(ErrorKind::kInput, "--points needs both a reference and a test file");
    }
    const auto ref = read_points(*c.points_reference);
    const auto tst = read_points(*c.points_test);
    return fit_affine_least_squares(ref, tst);
  }
  if (c.transform) return read_transform(*c.transform);
  return AffineTransform::identity();
}

AffineTransform required_transform(const PipelineConfig& c) {
  if (!c.transform) throw Error(ErrorKind::kInput, "this command requires --transform");
  try {
    return read_transform(*c.transform);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kSingularTransform) throw Error(ErrorKind::kInput, e.what());
    throw;
  }
}

void write_focus_outputs(const fs::path& path, const FocusMap& focus) {
  write_focus_map(path, focus);
  fs::path viz = path;
  viz.replace_extension(".pgm");
  if (viz == path) viz += ".pgm";
  write_pgm(viz, focus_to_gray8(focus));
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace

std::optional<FocusMap> build_focus(const PipelineConfig& c, const Image& reference) {
  switch (c.effective_preset()) {
    case Preset::kUniform:
      return std::nullopt;
    case Preset::kRestoration:
      return preset_restoration_focus(reference, c.focus_params);
    case Preset::kImplant:
      return preset_implant_focus(reference, c.focus_params);
    case Preset::kBone:
      return preset_bone_focus(reference, c.focus_params);
    case Preset::kCephalo: {
      const auto curves = load_curves(c);
      return spline_focus(curves, reference.width(), reference.height(), c.focus_params.sigma_spline);
    }
    case Preset::kGaussians:
      if (c.gaussians.empty()) throw Error(ErrorKind::kInput, "gaussians preset requires components");
      return gaussian_mixture_focus(reference.width(), reference.height(), c.gaussians);
    case Preset::kFile: {
      if (!c.focus_file) throw Error(ErrorKind::kInput, "file preset requires --focus");
      FocusMap f = read_focus_map(*c.focus_file);
      if (f.width() != reference.width() || f.height() != reference.height()) {
        throw Error(ErrorKind::kInput, "focus map does not match the reference image shape");
      }
      return f;
    }
  }
  return std::nullopt;
}

void cmd_focus(const PipelineConfig& c, std::ostream& out) {
  if (!c.out_focus) throw Error(ErrorKind::kInput, "focus requires --out-focus");
  const Image reference = load_required(c.reference, "reference");
  const auto focus = build_focus(c, reference);
  const FocusMap map = focus ? focus->normalized() : FocusMap::uniform(reference.width(), reference.height());
  write_focus_outputs(*c.out_focus, map);
  out << "preset " << to_string(c.effective_preset()) << '\n'
      << "focus " << c.out_focus->string() << '\n';
}

RegistrationResult cmd_register(const PipelineConfig& c, std::ostream& out) {
  const Image reference = load_required(c.reference, "reference");
  const Image test = load_required(c.test, "test");
  const BinningScheme scheme(c.bins);
  const auto focus = build_focus(c, reference);
  const SearchSpec spec = make_spec(c, initial_guess(c));

  const RegistrationResult result = multiresolution_register(
      reference, test, focus ? &*focus : nullptr, spec, scheme, c.levels);

  if (c.out_transform) write_transform(*c.out_transform, result.best);
  if (c.out_trace) {
    std::ofstream trace(*c.out_trace);
    if (!trace) throw Error(ErrorKind::kInput, "cannot write " + c.out_trace->string());
    write_trace(trace, result);
  }
  if (c.out_focus && focus) write_focus_outputs(*c.out_focus, focus->normalized());
  if (c.out_subtraction) {
    write_gray8(*c.out_subtraction, encode_subtraction(subtract(reference, test, result.best)));
  }
  out << to_string(c.criterion) << ' ' << fixed12(result.best_value) << '\n'
      << "overlap_fraction " << fixed12(result.overlap_fraction) << '\n'
      << "evaluations " << result.evaluations << '\n';
  write_transform_text(out, result.best);
  return result;
}

CriterionValues cmd_evaluate(const PipelineConfig& c, std::ostream& out) {
  const Image reference = load_required(c.reference, "reference");
  const Image test = load_required(c.test, "test");
  const AffineTransform t = required_transform(c);
  const BinningScheme scheme(c.bins);
  const auto focus = build_focus(c, reference);
  const JointHistogram h =
      focus ? accumulate_joint(reference, test, t, scheme, *focus) : accumulate_joint(reference, test, t, scheme);
  const CriterionValues v = criteria_from_histogram(h);
  out << "MI " << fixed12(v.mi) << '\n' << "NMI " << fixed12(v.nmi) << '\n' << "ECC " << fixed12(v.ecc) << '\n';
  return v;
}

void cmd_subtract(const PipelineConfig& c, std::ostream& out) {
  if (!c.out_subtraction) throw Error(ErrorKind::kInput, "subtract requires --out-subtraction");
  const Image reference = load_required(c.reference, "reference");
  const Image test = load_required(c.test, "test");
  const SubtractionImage s = subtract(reference, test, required_transform(c));
  write_gray8(*c.out_subtraction, encode_subtraction(s));
  out << "overlap_pixels " << s.valid_count() << '\n';
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInput:
    case ErrorKind::kDomain:
    case ErrorKind::kSingularTransform:
      return 2;
    case ErrorKind::kRegistrationFailed:
      return 4;
    case ErrorKind::kInternal:
      return 1;
    default:
      return 3;
  }
}

}  // namespace fmireg::pipeline
