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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <fmireg/criteria.hpp>
#include <fmireg/error.hpp>
#include <fmireg/focus.hpp>
#include <fmireg/registration.hpp>

namespace fmireg::pipeline {

enum class Preset { kUniform, kRestoration, kImplant, kBone, kCephalo, kGaussians, kFile };

Preset parse_preset(const std::string& name);
const char* to_string(Preset p) noexcept;

/// Everything a subcommand needs. Every field mirrors a config key and a
/// command-line flag.
struct PipelineConfig {
  std::filesystem::path reference;
  std::filesystem::path test;
  std::optional<std::filesystem::path> focus_file;
  std::optional<std::filesystem::path> points_reference;
  std::optional<std::filesystem::path> points_test;
  std::vector<std::filesystem::path> curve_files;
  std::vector<GaussianComponent> gaussians;
  /// Explicit transform for evaluate and subtract; initial guess for register
  /// when no landmark files are given.
  std::optional<std::filesystem::path> transform;

  std::optional<Preset> preset;
  Criterion criterion = Criterion::kNMI;
  int bins = kDefaultBins;
  FocusParams focus_params;

  double box_matrix = 0.15;
  double box_translation = 20.0;
  int levels = 1;
  int restarts = 3;
  int max_evals = 2000;
  double tolerance = 1e-6;
  double min_overlap = 0.01;
  unsigned seed = 0;

  std::optional<std::filesystem::path> out_transform;
  std::optional<std::filesystem::path> out_focus;
  std::optional<std::filesystem::path> out_subtraction;
  std::optional<std::filesystem::path> out_trace;

  /// Explicit preset, else kFile when a focus file is set, else kUniform.
  Preset effective_preset() const;
};

/// Reads a JSON config. Relative paths resolve against the file's directory.
PipelineConfig load_config(const std::filesystem::path& path);
/// Same, from an in-memory document.
PipelineConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir);

/// The focus selected by the config, or std::nullopt for uniform focus.
std::optional<FocusMap> build_focus(const PipelineConfig& config, const Image& reference);

/// Subcommands. Each writes its outputs and prints a short report to `out`.
/// Failures are thrown as fmireg::Error.
void cmd_focus(const PipelineConfig& config, std::ostream& out);
RegistrationResult cmd_register(const PipelineConfig& config, std::ostream& out);
CriterionValues cmd_evaluate(const PipelineConfig& config, std::ostream& out);
void cmd_subtract(const PipelineConfig& config, std::ostream& out);

/// 0 success, 2 input error, 3 degenerate computation, 4 registration
/// failure, 1 internal error.
int exit_code(ErrorKind kind) noexcept;

}  // namespace fmireg::pipeline
