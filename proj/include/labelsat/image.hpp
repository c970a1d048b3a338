// Copyright 2026 The labelsat Authors
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

#include <array>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "labelsat/dense.hpp"

namespace labelsat {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct Palette {
  Rgb negative{220, 40, 40};
  Rgb absent{0, 0, 0};
  Rgb positive{40, 200, 40};

  const Rgb& color(std::int8_t cell) const {
    return cell > 0 ? positive : (cell < 0 ? negative : absent);
  }
};

struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;  // row-major

  const Rgb& at(std::size_t y, std::size_t x) const { return pixels[y * width + x]; }
};

// Each cell becomes a scale x scale block of its palette color.
inline Image render_image(const DenseEncoding& enc, const Palette& palette = {},
                          std::size_t scale = 1) {
  if (palette.negative == palette.absent || palette.negative == palette.positive ||
      palette.absent == palette.positive)
    throw ArgumentError("render_image: palette colors must be distinct");
  if (scale == 0) throw ArgumentError("render_image: scale must be at least 1");
  Image img;
  img.width = enc.cols() * scale;
  img.height = enc.rows() * scale;
  img.pixels.resize(img.width * img.height);
  for (std::size_t y = 0; y < img.height; ++y)
    for (std::size_t x = 0; x < img.width; ++x)
      img.pixels[y * img.width + x] = palette.color(enc.at(y / scale, x / scale));
  return img;
}

// Binary PPM (P6), maxval 255.
inline std::string encode_ppm(const Image& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                    "\n255\n";
  out.reserve(out.size() + img.pixels.size() * 3);
  for (const auto& p : img.pixels) {
    out.push_back(static_cast<char>(p.r));
    out.push_back(static_cast<char>(p.g));
    out.push_back(static_cast<char>(p.b));
  }
  return out;
}

inline void write_ppm(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  const auto bytes = encode_ppm(img);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace labelsat
