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

#include "fmireg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "fmireg/error.hpp"

namespace fmireg {

namespace fs = std::filesystem;

Image to_image(const Gray8& raster) {
  Grid<double> g(raster.width(), raster.height());
  std::transform(raster.values().begin(), raster.values().end(), g.values().begin(),
                 [](std::uint8_t b) { return b / 255.0; });
  return Image(std::move(g));
}

Gray8 to_gray8(const Image& img) {
  Gray8 out(img.width(), img.height());
  std::transform(img.values().begin(), img.values().end(), out.values().begin(), [](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v * 255.0), 0L, 255L));
  });
  return out;
}

namespace {

void check_size(long long w, long long h, const fs::path& path) {
  if (w < 1 || h < 1) throw Error(ErrorKind::kInput, path.string() + ": bad dimensions");
  if (static_cast<unsigned long long>(w) * static_cast<unsigned long long>(h) > kMaxPixels) {
    throw Error(ErrorKind::kInput, path.string() + ": image exceeds 16 megapixels");
  }
}

// Next whitespace-delimited header token, skipping '#' comments.
std::string pnm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

Gray8 read_pgm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot open " + path.string());
  if (pnm_token(in) != "P5") throw Error(ErrorKind::kInput, path.string() + ": not a binary PGM");
  long long w = 0, h = 0, maxval = 0;
  try {
    w = std::stoll(pnm_token(in));
    h = std::stoll(pnm_token(in));
    maxval = std::stoll(pnm_token(in));
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInput, path.string() + ": malformed PGM header");
  }
  check_size(w, h, path);
  if (maxval != 255) throw Error(ErrorKind::kInput, path.string() + ": only maxval 255 is supported");
  Gray8 out(static_cast<int>(w), static_cast<int>(h));
  in.read(reinterpret_cast<char*>(out.values().data()), static_cast<std::streamsize>(out.size()));
  if (in.gcount() != static_cast<std::streamsize>(out.size())) {
    throw Error(ErrorKind::kInput, path.string() + ": truncated PGM data");
  }
  return out;
}

Gray8 read_png(const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw Error(ErrorKind::kInput, path.string() + ": " + image.message);
  }
  if ((image.format & (PNG_FORMAT_FLAG_COLOR | PNG_FORMAT_FLAG_LINEAR)) != 0) {
    png_image_free(&image);
    throw Error(ErrorKind::kInput, path.string() + ": only 8-bit grayscale PNG is supported");
  }
  try {
    check_size(image.width, image.height, path);
  } catch (...) {
    png_image_free(&image);
    throw;
  }
  image.format = PNG_FORMAT_GRAY;
  Gray8 out(static_cast<int>(image.width), static_cast<int>(image.height));
  if (!png_image_finish_read(&image, nullptr, out.values().data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorKind::kInput, path.string() + ": " + msg);
  }
  return out;
}

}  // namespace

Gray8 read_gray8(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInput, "cannot open " + path.string());
  std::array<unsigned char, 8> magic{};
  in.read(reinterpret_cast<char*>(magic.data()), magic.size());
  const auto got = static_cast<std::size_t>(in.gcount());
  in.close();
  if (got >= 2 && magic[0] == 'P' && magic[1] == '5') return read_pgm(path);
  if (got == 8 && png_sig_cmp(magic.data(), 0, 8) == 0) return read_png(path);
  throw Error(ErrorKind::kInput, path.string() + ": unrecognized image format (need P5 PGM or PNG)");
}

Image read_image(const fs::path& path) { return to_image(read_gray8(path)); }

void write_pgm(const fs::path& path, const Gray8& raster) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInput, "cannot write " + path.string());
  out << "P5\n" << raster.width() << ' ' << raster.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(raster.values().data()),
            static_cast<std::streamsize>(raster.size()));
  if (!out) throw Error(ErrorKind::kInput, "write failed: " + path.string());
}

void write_png(const fs::path& path, const Gray8& raster) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(raster.width());
  image.height = static_cast<png_uint_32>(raster.height());
  image.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.c_str(), 0, raster.values().data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw Error(ErrorKind::kInput, "cannot write " + path.string() + ": " + msg);
  }
}

void write_gray8(const fs::path& path, const Gray8& raster) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".png") {
    write_png(path, raster);
  } else {
    write_pgm(path, raster);
  }
}

}  // namespace fmireg
