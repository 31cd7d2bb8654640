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

// fmireg: focussed mutual information registration and subtraction.
//
//   fmireg focus    --reference ref.pgm --preset restoration --out-focus f.txt
//   fmireg register --reference ref.pgm --test test.pgm --preset bone ...
//   fmireg evaluate --reference ref.pgm --test test.pgm --transform t.txt
//   fmireg subtract --reference ref.pgm --test test.pgm --transform t.txt --out-subtraction d.pgm

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pipeline.hpp"

namespace {

using fmireg::pipeline::PipelineConfig;

struct Flags {
  std::string config;
  std::string reference, test, focus, preset, criterion, transform;
  int bins = 0;
  double sigma_edge = 0, sigma_spline = 0, threshold = 0;
  int median_radius = 0, close_radius = 0, dilate_radius = 0;
  std::vector<std::string> points;
  std::vector<std::string> curves;
  std::vector<std::string> gaussians;
  double box_matrix = 0, box_translation = 0, tolerance = 0;
  int levels = 0, restarts = 0, max_evals = 0;
  unsigned seed = 0;
  std::string out_transform, out_focus, out_subtraction, out_trace;

  std::vector<std::pair<std::string, CLI::Option*>> options;

  void attach(CLI::App* app) {
    auto add = [&](const std::string& name, auto& dst, const std::string& help) {
      options.emplace_back(name, app->add_option(name, dst, help));
    };
    add("--config", config, "JSON config document; flags override its values");
    add("--reference", reference, "reference image (PGM P5 or PNG)");
    add("--test", test, "test image (PGM P5 or PNG)");
    add("--focus", focus, "focus map file");
    add("--preset", preset, "uniform|restoration|implant|bone|cephalo|gaussians|file");
    add("--criterion", criterion, "MI|NMI|ECC");
    add("--bins", bins, "gray-value bins K");
    add("--sigma-edge", sigma_edge, "Gaussian sigma of the edge map (px)");
    add("--sigma-spline", sigma_spline, "Gaussian sigma of the spline focus (px)");
    add("--median-radius", median_radius, "median filter radius (px)");
    add("--close-radius", close_radius, "closing disk radius (px)");
    add("--dilate-radius", dilate_radius, "dilation disk radius (px)");
    add("--threshold", threshold, "manual segmentation threshold in [0,1] (default Otsu)");
    options.emplace_back("--points", app->add_option("--points", points, "reference and test landmark tables (x,y lines)")
                                         ->expected(2));
    add("--curves", curves, "spline control point files");
    add("--gaussian", gaussians, "mixture component 'weight,x,y,sigma' (repeatable)");
    add("--box-matrix", box_matrix, "half width of the search box on matrix entries");
    add("--box-translation", box_translation, "half width of the search box on translations (px)");
    add("--levels", levels, "pyramid levels");
    add("--restarts", restarts, "extra optimizer starts");
    add("--max-evals", max_evals, "evaluation budget per optimizer start");
    add("--tolerance", tolerance, "convergence threshold on the criterion");
    add("--seed", seed, "offset of the restart point sequence");
    add("--transform", transform, "transform file (record or JSON)");
    add("--out-transform", out_transform, "output transform (.json for the structured form)");
    add("--out-focus", out_focus, "output focus map (a .pgm rendering is written next to it)");
    add("--out-subtraction", out_subtraction, "output subtraction image (.png or PGM)");
    add("--out-trace", out_trace, "output optimizer trace table");
  }

  bool given(const std::string& name) const {
    for (const auto& [n, opt] : options) {
      if (n == name) return opt->count() > 0;
    }
    return false;
  }

  PipelineConfig resolve() const {
    PipelineConfig c = config.empty() ? PipelineConfig{} : fmireg::pipeline::load_config(config);
    if (given("--reference")) c.reference = reference;
    if (given("--test")) c.test = test;
    if (given("--focus")) c.focus_file = focus;
    if (given("--preset")) c.preset = fmireg::pipeline::parse_preset(preset);
    if (given("--criterion")) c.criterion = fmireg::parse_criterion(criterion);
    if (given("--bins")) c.bins = bins;
    if (given("--sigma-edge")) c.focus_params.sigma_edge = sigma_edge;
    if (given("--sigma-spline")) c.focus_params.sigma_spline = sigma_spline;
    if (given("--median-radius")) c.focus_params.median_radius = median_radius;
    if (given("--close-radius")) c.focus_params.close_radius = close_radius;
    if (given("--dilate-radius")) c.focus_params.dilate_radius = dilate_radius;
    if (given("--threshold")) c.focus_params.threshold = threshold;
    if (given("--points")) {
      c.points_reference = points.at(0);
      c.points_test = points.at(1);
    }
    if (given("--curves")) c.curve_files.assign(curves.begin(), curves.end());
    if (given("--gaussian")) {
      c.gaussians.clear();
      for (const auto& g : gaussians) c.gaussians.push_back(parse_gaussian(g));
    }
    if (given("--box-matrix")) c.box_matrix = box_matrix;
    if (given("--box-translation")) c.box_translation = box_translation;
    if (given("--levels")) c.levels = levels;
    if (given("--restarts")) c.restarts = restarts;
    if (given("--max-evals")) c.max_evals = max_evals;
    if (given("--tolerance")) c.tolerance = tolerance;
    if (given("--seed")) c.seed = seed;
    if (given("--transform")) c.transform = transform;
    if (given("--out-transform")) c.out_transform = out_transform;
    if (given("--out-focus")) c.out_focus = out_focus;
    if (given("--out-subtraction")) c.out_subtraction = out_subtraction;
    if (given("--out-trace")) c.out_trace = out_trace;
    if (c.bins < 2) throw fmireg::Error(fmireg::ErrorKind::kInput, "--bins must be >= 2");
    return c;
  }

  static fmireg::GaussianComponent parse_gaussian(const std::string& text) {
    std::istringstream in(text);
    fmireg::GaussianComponent g;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(in >> g.weight >> c1 >> g.center.x >> c2 >> g.center.y >> c3 >> g.sigma) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      throw fmireg::Error(fmireg::ErrorKind::kInput, "--gaussian expects 'weight,x,y,sigma'");
    }
    return g;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Focussed mutual information image registration"};
  app.require_subcommand(1);

  Flags focus_flags, register_flags, evaluate_flags, subtract_flags;
  auto* focus_cmd = app.add_subcommand("focus", "build and write a focus map");
  auto* register_cmd = app.add_subcommand("register", "register test onto reference and subtract");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "print MI, NMI and ECC for a given transform");
  auto* subtract_cmd = app.add_subcommand("subtract", "write the subtraction image for a transform");
  focus_flags.attach(focus_cmd);
  register_flags.attach(register_cmd);
  evaluate_flags.attach(evaluate_cmd);
  subtract_flags.attach(subtract_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  namespace pl = fmireg::pipeline;
  try {
    if (focus_cmd->parsed()) {
      pl::cmd_focus(focus_flags.resolve(), std::cout);
    } else if (register_cmd->parsed()) {
      pl::cmd_register(register_flags.resolve(), std::cout);
    } else if (evaluate_cmd->parsed()) {
      pl::cmd_evaluate(evaluate_flags.resolve(), std::cout);
    } else if (subtract_cmd->parsed()) {
      pl::cmd_subtract(subtract_flags.resolve(), std::cout);
    }
  } catch (const fmireg::Error& e) {
    std::cerr << "fmireg: " << e.what() << '\n';
    return pl::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fmireg: internal-error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
