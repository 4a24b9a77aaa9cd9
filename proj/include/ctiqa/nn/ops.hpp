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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctiqa/nn/tensor.hpp"

// Differentiable primitives. Every function records an exact adjoint on the
// tape when an input requires grad, and throws ShapeMismatch / NonFinite on
// bad inputs or outputs.
namespace ctiqa::nn {

// Elementwise with numpy-style broadcasting (right-aligned, extents equal or 1).
template <typename T> Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b);
template <typename T> Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b);
template <typename T> Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b);
template <typename T> Tensor<T> div(const Tensor<T>& a, const Tensor<T>& b);

template <typename T> Tensor<T> scale(const Tensor<T>& x, T factor);
template <typename T> Tensor<T> add_scalar(const Tensor<T>& x, T offset);

template <typename T> Tensor<T> relu(const Tensor<T>& x);
// Exact (erf) GELU.
template <typename T> Tensor<T> gelu(const Tensor<T>& x);
template <typename T> Tensor<T> silu(const Tensor<T>& x);
template <typename T> Tensor<T> sigmoid(const Tensor<T>& x);

// Full reductions to shape (1).
template <typename T> Tensor<T> sum(const Tensor<T>& x);
template <typename T> Tensor<T> mean(const Tensor<T>& x);
// Reduction over one axis; the axis is dropped unless keepdim.
template <typename T> Tensor<T> sum_axis(const Tensor<T>& x, int axis, bool keepdim = false);
template <typename T> Tensor<T> mean_axis(const Tensor<T>& x, int axis, bool keepdim = false);

// (batch..., m, k) x (k, n) or (batch..., k, n) -> (batch..., m, n); the
// flags transpose the last two axes of the stored operand.
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b, bool trans_a = false,
                 bool trans_b = false);
// x (..., in) * weight (in, out) + bias (out); bias may be undefined.
template <typename T>
Tensor<T> linear(const Tensor<T>& x, const Tensor<T>& weight, const Tensor<T>& bias);

// x (B, Cin, H, W), weight (Cout, Cin, K, K), bias (Cout) or undefined.
template <typename T>
Tensor<T> conv2d(const Tensor<T>& x, const Tensor<T>& weight, const Tensor<T>& bias,
                 std::int64_t stride, std::int64_t pad);
// (B, C, H, W) -> (B, C, 2H, 2W), nearest neighbour.
template <typename T> Tensor<T> upsample_nearest2x(const Tensor<T>& x);

template <typename T> Tensor<T> softmax(const Tensor<T>& x, int axis = -1);
// Normalizes each group formed by the trailing `normalized_rank` axes to zero
// mean / unit variance (biased). No affine part; compose with mul/add.
template <typename T>
Tensor<T> layer_norm(const Tensor<T>& x, int normalized_rank, T eps = T(1e-5));

template <typename T> Tensor<T> reshape(const Tensor<T>& x, const Shape& shape);
template <typename T> Tensor<T> permute(const Tensor<T>& x, const std::vector<int>& order);
template <typename T> Tensor<T> transpose(const Tensor<T>& x, int axis_a, int axis_b);
// Elements [start, stop) along axis.
template <typename T>
Tensor<T> slice(const Tensor<T>& x, int axis, std::int64_t start, std::int64_t stop);
template <typename T> Tensor<T> concat(const std::vector<Tensor<T>>& xs, int axis);
// Cyclic shift: out[i] = x[(i - shift) mod n] along axis.
template <typename T> Tensor<T> roll(const Tensor<T>& x, int axis, std::int64_t shift);

// (B, H, W, C) -> (B * H/w * W/w, w*w, C), windows in row-major order.
template <typename T> Tensor<T> window_partition(const Tensor<T>& x, std::int64_t window);
// Inverse of window_partition for a (batch, height, width) grid.
template <typename T>
Tensor<T> window_merge(const Tensor<T>& windows, std::int64_t batch, std::int64_t height,
                       std::int64_t width, std::int64_t window);

template <typename T> Tensor<T> mse_loss(const Tensor<T>& prediction, const Tensor<T>& target);

// Name-based entry point over the primitive set. Attributes:
//   matmul: trans_a, trans_b (bool)        conv2d: stride, pad (int)
//   softmax: axis (int)                   layer_norm: normalized_rank (int), eps (real)
//   sum_axis / mean_axis: axis, keepdim   reshape: shape (ints)
//   permute: order (ints)                 transpose: axis_a, axis_b
//   slice: axis, start, stop              concat: axis
//   roll: axis, shift                     window_partition: window
//   window_merge: batch, height, width, window
//   scale: factor                         add_scalar: offset
// conv2d / linear take an optional trailing bias input.
using AttributeValue = std::variant<std::int64_t, double, bool, std::vector<std::int64_t>>;
using Attributes = std::map<std::string, AttributeValue, std::less<>>;

template <typename T>
Tensor<T> apply_primitive(std::string_view kind, std::span<const Tensor<T>> inputs,
                          const Attributes& attrs = {});

std::vector<std::string> primitive_names();

}  // namespace ctiqa::nn
