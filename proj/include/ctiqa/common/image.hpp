// Copyright 2026 The ctiqa Authors.
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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace ctiqa {

// Row-major, channel-minor 2-D grid. Pixel values are either HU or the
// normalized [0, 1] range; the producer decides which.
struct Image {
  std::int64_t height = 0;
  std::int64_t width = 0;
  std::int64_t channels = 1;
  std::vector<float> data;

  Image() = default;
  Image(std::int64_t h, std::int64_t w, std::int64_t c = 1, float fill = 0.0f)
      : height(h), width(w), channels(c), data(static_cast<std::size_t>(h * w * c), fill) {}

  std::size_t size() const { return data.size(); }
  float& at(std::int64_t r, std::int64_t c, std::int64_t ch = 0) {
    return data[static_cast<std::size_t>((r * width + c) * channels + ch)];
  }
  float at(std::int64_t r, std::int64_t c, std::int64_t ch = 0) const {
    return data[static_cast<std::size_t>((r * width + c) * channels + ch)];
  }
  bool same_shape(const Image& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
};

// CTIQ1: "CTIQ1\0", u32 LE height, width, channels, then f32 LE pixels.
std::string encode_ctiq1(const Image& image);
Image decode_ctiq1(std::string_view bytes);

// Writes `path` and, when `sidecar` is not null, `path` with extension
// replaced by .json. Both writes are atomic.
void write_image(const std::filesystem::path& path, const Image& image,
                 const nlohmann::json& sidecar = nullptr);
Image read_image(const std::filesystem::path& path);
nlohmann::json read_sidecar(const std::filesystem::path& image_path);
std::filesystem::path sidecar_path(const std::filesystem::path& image_path);

}  // namespace ctiqa
