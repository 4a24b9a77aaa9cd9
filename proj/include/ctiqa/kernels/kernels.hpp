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

// Hot loops of the library. Every kernel exists twice: a plain serial
// version in `reference` (kept for testing and as the readable definition)
// and an OpenMP version in `parallel`. Parallel kernels partition the OUTPUT
// so each element is produced by exactly one thread in a fixed accumulation
// order; their results therefore do not depend on the thread count.

#include <cstdint>
#include <span>

namespace ctiqa::kernels {

enum class Backend { kReference, kParallel };

void set_backend(Backend b);
Backend backend();

// C (m x n) = op(A) * op(B) [+ C]. op(A) is m x k; A is stored k x m when
// trans_a. op(B) is k x n; B is stored n x k when trans_b. Row-major.
struct GemmDims {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  bool trans_a = false;
  bool trans_b = false;
};

// Geometry of a square-kernel 2-D convolution over one C x H x W image with
// zero padding.
struct ConvGeometry {
  std::int64_t channels = 0;
  std::int64_t height = 0;
  std::int64_t width = 0;
  std::int64_t kernel = 1;
  std::int64_t stride = 1;
  std::int64_t pad = 0;

  std::int64_t out_height() const { return (height + 2 * pad - kernel) / stride + 1; }
  std::int64_t out_width() const { return (width + 2 * pad - kernel) / stride + 1; }
  std::int64_t col_rows() const { return channels * kernel * kernel; }
  std::int64_t col_cols() const { return out_height() * out_width(); }
};

// Parallel-beam backprojection geometry. Pixel (r, c) of an n x n grid
// covering [-fov_radius, fov_radius]^2 sits at x = -R + (c + 0.5) * dx,
// y = R - (r + 0.5) * dx. Detector k sits at s = (k - (n_det - 1) / 2) * ds.
struct BackprojectGeometry {
  std::int64_t n_views = 0;
  std::int64_t n_detectors = 0;
  double detector_spacing = 0.0;
  std::int64_t out_size = 0;
  double fov_radius = 0.0;
};

#define CTIQA_KERNEL_DECLS                                                    \
  template <typename T>                                                       \
  void gemm(const GemmDims& d, std::span<const T> a, std::span<const T> b,    \
            std::span<T> c, bool accumulate);                                 \
  template <typename T>                                                       \
  void im2col(const ConvGeometry& g, std::span<const T> image,                \
              std::span<T> cols);                                             \
  template <typename T>                                                       \
  void col2im(const ConvGeometry& g, std::span<const T> cols,                 \
              std::span<T> image);                                            \
  void gaussian_filter(std::int64_t height, std::int64_t width,               \
                       std::span<const double> taps, std::span<const double> in, \
                       std::span<double> out);                                \
  void ramp_filter(std::int64_t n_views, std::int64_t n_detectors,            \
                   double spacing, std::span<const double> sino,              \
                   std::span<double> out);                                    \
  void backproject(const BackprojectGeometry& g, std::span<const double> angles, \
                   std::span<const double> filtered, std::span<double> image);

namespace reference {
CTIQA_KERNEL_DECLS
}  // namespace reference

namespace parallel {
CTIQA_KERNEL_DECLS
}  // namespace parallel

// Dispatch on the active backend.
CTIQA_KERNEL_DECLS

#undef CTIQA_KERNEL_DECLS

// col2im accumulates into `image`; the caller zeroes it first when needed.
// gaussian_filter applies the 1-D taps along rows and columns (outer product
// window) with reflect padding ("d c b | a b c d"); taps.size() must be odd.
// ramp_filter convolves each view with the discrete Ram-Lak kernel and scales
// by the detector spacing.
// backproject adds (pi / n_views) * sum over views of the linearly
// interpolated filtered projection into `image` (which it overwrites).

}  // namespace ctiqa::kernels
