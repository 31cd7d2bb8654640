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

#include "fmireg/text_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fmireg/error.hpp"

namespace fmireg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInput, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInput, "cannot write " + path.string());
  return out;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_double(const std::string& token, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw Error(ErrorKind::kInput, std::string("bad number in ") + what + ": '" + token + "'");
  }
  return v;
}

}  // namespace

void write_focus_map(std::ostream& out, const FocusMap& focus) {
  const FocusMap f = focus.normalized();
  out << "FOCUSMAP " << f.width() << ' ' << f.height() << " sum-normalized\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (int y = 0; y < f.height(); ++y) {
    for (int x = 0; x < f.width(); ++x) {
      if (x) out << ' ';
      out << f(x, y);
    }
    out << '\n';
  }
}

void write_focus_map(const fs::path& path, const FocusMap& focus) {
  auto out = open_out(path);
  write_focus_map(out, focus);
}

FocusMap read_focus_map(std::istream& in) {
  std::string magic, tag;
  long long w = 0, h = 0;
  if (!(in >> magic >> w >> h >> tag) || magic != "FOCUSMAP" || tag != "sum-normalized") {
    throw Error(ErrorKind::kInput, "not a focus map file");
  }
  if (w < 1 || h < 1 || static_cast<unsigned long long>(w * h) > kMaxPixels) {
    throw Error(ErrorKind::kInput, "bad focus map dimensions");
  }
  Grid<double> g(static_cast<int>(w), static_cast<int>(h));
  std::string token;
  for (double& v : g.values()) {
    if (!(in >> token)) throw Error(ErrorKind::kInput, "truncated focus map");
    v = parse_double(token, "focus map");
  }
  return FocusMap(std::move(g));
}

FocusMap read_focus_map(const fs::path& path) {
  auto in = open_in(path);
  return read_focus_map(in);
}

Gray8 focus_to_gray8(const FocusMap& focus) {
  const double peak = focus.max();
  Gray8 out(focus.width(), focus.height());
  for (int y = 0; y < focus.height(); ++y) {
    for (int x = 0; x < focus.width(); ++x) {
      out(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(255.0 * focus(x, y) / peak), 0L, 255L));
    }
  }
  return out;
}

void write_transform_text(std::ostream& out, const AffineTransform& t) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  const auto p = t.parameters();
  out << p[0] << ' ' << p[1] << ' ' << p[2] << ' ' << p[3] << ' ' << p[4] << ' ' << p[5] << '\n';
  out.precision(old);
}

void write_transform_json(std::ostream& out, const AffineTransform& t) {
  const json j = {{"a11", t.a11()}, {"a12", t.a12()}, {"a21", t.a21()},
                  {"a22", t.a22()}, {"tx", t.tx()},   {"ty", t.ty()}};
  out << j.dump(2) << '\n';
}

void write_transform(const fs::path& path, const AffineTransform& t) {
  auto out = open_out(path);
  if (path.extension() == ".json") {
    write_transform_json(out, t);
  } else {
    write_transform_text(out, t);
  }
}

AffineTransform read_transform(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    try {
      const json j = json::parse(body);
      return {j.at("a11").get<double>(), j.at("a12").get<double>(), j.at("a21").get<double>(),
              j.at("a22").get<double>(), j.at("tx").get<double>(),  j.at("ty").get<double>()};
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kInput, std::string("bad transform document: ") + e.what());
    }
  }
  std::istringstream fields(body);
  std::array<double, 6> p{};
  std::string token;
  for (double& v : p) {
    if (!(fields >> token)) throw Error(ErrorKind::kInput, "transform record needs 6 fields");
    v = parse_double(token, "transform record");
  }
  if (fields >> token) throw Error(ErrorKind::kInput, "transform record has extra fields");
  return deparameterize(p);
}

AffineTransform read_transform(const fs::path& path) {
  auto in = open_in(path);
  return read_transform(in);
}

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::kInput, "line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    out.push_back({parse_double(trim(line.substr(0, comma)), "point table"),
                   parse_double(trim(line.substr(comma + 1)), "point table")});
  }
  return out;
}

std::vector<Point> read_points(const fs::path& path) {
  auto in = open_in(path);
  return read_points(in);
}

std::vector<SplineCurve> read_curves(const fs::path& path) {
  auto in = open_in(path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const std::string body = trim(text);
  if (body.empty() || body.front() != '{') {
    std::istringstream table(text);
    return {SplineCurve(read_points(table), path.stem().string())};
  }
  std::vector<SplineCurve> curves;
  try {
    const json j = json::parse(body);
    for (const auto& c : j.at("curves")) {
      std::vector<Point> pts;
      for (const auto& p : c.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      curves.emplace_back(std::move(pts), c.value("name", std::string{}));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInput, path.string() + ": bad curve document: " + e.what());
  }
  if (curves.empty()) throw Error(ErrorKind::kInput, path.string() + ": no curves");
  return curves;
}

}  // namespace fmireg
