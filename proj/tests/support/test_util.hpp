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
#include <fstream>
#include <iterator>
#include <string>

#include <doctest.h>

#include <fmireg/error.hpp>

// Checks that `expr` throws fmireg::Error of the given kind.
#define CHECK_ERROR_KIND(expr, expected_kind)                                   \
  do {                                                                          \
    bool fmireg_thrown_ = false;                                                \
    try {                                                                       \
      (void)(expr);                                                             \
    } catch (const ::fmireg::Error& fmireg_e_) {                                \
      fmireg_thrown_ = true;                                                    \
      CHECK_MESSAGE(fmireg_e_.kind() == (expected_kind), fmireg_e_.what());     \
    }                                                                           \
    CHECK_MESSAGE(fmireg_thrown_, "expected fmireg::Error from " #expr);        \
  } while (0)

namespace fmireg::testing {

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("fmireg_unit_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace fmireg::testing
