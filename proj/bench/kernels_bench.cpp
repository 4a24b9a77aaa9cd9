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

// Reference vs. OpenMP kernels at the sizes the pipeline actually uses.
#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ctiqa/common/rng.hpp"
#include "ctiqa/kernels/kernels.hpp"

namespace {

using namespace ctiqa::kernels;

template <typename T>
std::vector<T> random_vector(std::size_t n, std::uint64_t seed) {
  auto rng = ctiqa::make_rng(seed);
  std::normal_distribution<double> d;
  std::vector<T> v(n);
  for (auto& x : v) x = static_cast<T>(d(rng));
  return v;
}

template <bool Parallel>
void BM_Gemm(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  GemmDims d{.m = n, .n = n, .k = n};
  const auto a = random_vector<float>(n * n, 1);
  const auto b = random_vector<float>(n * n, 2);
  std::vector<float> c(n * n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      parallel::gemm<float>(d, a, b, c, false);
    } else {
      reference::gemm<float>(d, a, b, c, false);
    }
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * 2 * n * n * n);
}
BENCHMARK(BM_Gemm<false>)->Name("gemm/reference")->Arg(64)->Arg(256);
BENCHMARK(BM_Gemm<true>)->Name("gemm/parallel")->Arg(64)->Arg(256);

// U-Net style 3x3 convolution lowered to im2col + gemm.
template <bool Parallel>
void BM_Conv3x3(benchmark::State& state) {
  const std::int64_t ch = state.range(0), hw = state.range(1);
  ConvGeometry g{.channels = ch, .height = hw, .width = hw, .kernel = 3, .stride = 1, .pad = 1};
  const auto img = random_vector<float>(ch * hw * hw, 3);
  const auto w = random_vector<float>(ch * g.col_rows(), 4);
  std::vector<float> cols(g.col_rows() * g.col_cols()), out(ch * g.col_cols());
  GemmDims d{.m = ch, .n = g.col_cols(), .k = g.col_rows()};
  for (auto _ : state) {
    if constexpr (Parallel) {
      parallel::im2col<float>(g, img, cols);
      parallel::gemm<float>(d, w, cols, out, false);
    } else {
      reference::im2col<float>(g, img, cols);
      reference::gemm<float>(d, w, cols, out, false);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * 2 * d.m * d.n * d.k);
}
BENCHMARK(BM_Conv3x3<false>)->Name("conv3x3/reference")->Args({16, 64})->Args({32, 32});
BENCHMARK(BM_Conv3x3<true>)->Name("conv3x3/parallel")->Args({16, 64})->Args({32, 32});

template <bool Parallel>
void BM_Gaussian(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<double> taps(11);
  double s = 0.0;
  for (int i = 0; i < 11; ++i) s += taps[i] = std::exp(-(i - 5) * (i - 5) / 4.5);
  for (auto& t : taps) t /= s;
  const auto in = random_vector<double>(n * n, 5);
  std::vector<double> out(n * n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      parallel::gaussian_filter(n, n, taps, in, out);
    } else {
      reference::gaussian_filter(n, n, taps, in, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Gaussian<false>)->Name("gaussian/reference")->Arg(64);
BENCHMARK(BM_Gaussian<true>)->Name("gaussian/parallel")->Arg(64);

template <bool Parallel>
void BM_Fbp(benchmark::State& state) {
  const std::int64_t views = state.range(0), dets = 96, size = 64;
  const auto sino = random_vector<double>(views * dets, 6);
  std::vector<double> filtered(sino.size()), image(size * size), angles(views);
  for (std::int64_t v = 0; v < views; ++v) angles[v] = std::numbers::pi * v / views;
  BackprojectGeometry g{.n_views = views, .n_detectors = dets, .detector_spacing = 40.0 / dets,
                        .out_size = size, .fov_radius = 20.0};
  for (auto _ : state) {
    if constexpr (Parallel) {
      parallel::ramp_filter(views, dets, g.detector_spacing, sino, filtered);
      parallel::backproject(g, angles, filtered, image);
    } else {
      reference::ramp_filter(views, dets, g.detector_spacing, sino, filtered);
      reference::backproject(g, angles, filtered, image);
    }
    benchmark::DoNotOptimize(image.data());
  }
}
BENCHMARK(BM_Fbp<false>)->Name("fbp/reference")->Arg(180)->Arg(45);
BENCHMARK(BM_Fbp<true>)->Name("fbp/parallel")->Arg(180)->Arg(45);

}  // namespace

BENCHMARK_MAIN();
