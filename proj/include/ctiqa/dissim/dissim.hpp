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
#include <vector>

#include "ctiqa/common/image.hpp"

namespace ctiqa::dissim {

struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double c1 = 1e-4;  // (0.01 L)^2, L = 1
  double c2 = 9e-4;  // (0.03 L)^2
};

// Per-pixel local SSIM of two single-channel [0, 1] images, computed in
// 64-bit with Gaussian-weighted moments and reflect padding, then clamped
// to [0, 1]. Throws ShapeMismatch, RangeError.
struct SsimMap {
  std::int64_t height = 0;
  std::int64_t width = 0;
  std::vector<double> values;
  SsimParams params;

  double mean() const;
};

SsimMap ssim_map(const Image& a, const Image& b, const SsimParams& params = {});
// Mean of the clamped map; the scalar used for proxy scores.
double mean_ssim(const Image& a, const Image& b, const SsimParams& params = {});

// Normalized 1-D Gaussian taps of odd length `window`.
std::vector<double> gaussian_taps(int window, double sigma);

// (1 - ssim_map(distorted, primary)) * distorted, elementwise.
Image dissimilarity_map(const Image& distorted, const Image& primary,
                        const SsimParams& params = {});

enum class InputMode {
  kDissimilarity,  // [dmap, distorted, distorted] (dmap slot configurable)
  kDistortedOnly,  // [distorted] x 3, the evaluator without primary content
};

struct AssembleConfig {
  double crop_fraction = 0.875;
  std::int64_t out_size = 32;
  InputMode mode = InputMode::kDissimilarity;
  int dmap_channel = 0;
};

// Center crop to crop_fraction of each side, bilinear resample (half-pixel
// centers) to out_size, then stack into a 3-channel image. `dmap` is ignored
// in kDistortedOnly mode and may be empty. Throws BadCropFraction.
Image assemble_input(const Image& distorted, const Image& dmap, const AssembleConfig& config);

// Center crop + bilinear resample of one single-channel plane.
Image crop_and_resize(const Image& plane, double crop_fraction, std::int64_t out_size);

}  // namespace ctiqa::dissim
