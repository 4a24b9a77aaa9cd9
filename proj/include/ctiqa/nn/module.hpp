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
#include <string>
#include <vector>

#include "ctiqa/common/rng.hpp"
#include "ctiqa/nn/ops.hpp"
#include "ctiqa/nn/tensor.hpp"

namespace ctiqa::nn {

template <typename T>
struct AdamState {
  std::vector<T> m;
  std::vector<T> v;
  std::int64_t step = 0;
};

// A learnable tensor with its path inside a model and its optimizer moments.
template <typename T>
struct Parameter {
  std::string name;
  Tensor<T> tensor;
  AdamState<T> adam;
};

// Owns every parameter of a model. Layers keep Tensor handles that share
// storage with the entries here.
template <typename T>
class ParameterStore {
 public:
  Tensor<T> create(const std::string& name, const Shape& shape, std::vector<T> init);
  // Uniform(-bound, bound) initialization.
  Tensor<T> uniform(const std::string& name, const Shape& shape, double bound, Rng& rng);
  Tensor<T> zeros(const std::string& name, const Shape& shape);
  Tensor<T> ones(const std::string& name, const Shape& shape);

  std::vector<Parameter<T>>& parameters() { return params_; }
  const std::vector<Parameter<T>>& parameters() const { return params_; }
  const Parameter<T>& at(const std::string& name) const;
  std::int64_t scalar_count() const;
  void zero_grad();

 private:
  std::vector<Parameter<T>> params_;
};

template <typename T>
class Linear {
 public:
  Linear() = default;
  Linear(ParameterStore<T>& store, const std::string& name, std::int64_t in, std::int64_t out,
         Rng& rng, bool bias = true);
  Tensor<T> operator()(const Tensor<T>& x) const { return linear(x, weight, bias); }

  Tensor<T> weight;  // (in, out)
  Tensor<T> bias;    // (out) or undefined
};

template <typename T>
class Conv2d {
 public:
  Conv2d() = default;
  Conv2d(ParameterStore<T>& store, const std::string& name, std::int64_t in, std::int64_t out,
         std::int64_t kernel, std::int64_t stride, std::int64_t pad, Rng& rng, bool bias = true);
  Tensor<T> operator()(const Tensor<T>& x) const { return conv2d(x, weight, bias, stride_, pad_); }

  Tensor<T> weight;  // (out, in, k, k)
  Tensor<T> bias;

 private:
  std::int64_t stride_ = 1;
  std::int64_t pad_ = 0;
};

// Layer norm over the last axis with per-feature gain and offset.
template <typename T>
class LayerNorm {
 public:
  LayerNorm() = default;
  LayerNorm(ParameterStore<T>& store, const std::string& name, std::int64_t dim);
  Tensor<T> operator()(const Tensor<T>& x) const;

  Tensor<T> gain;
  Tensor<T> offset;
};

// Layer norm over a whole (C, H, W) feature map per sample, with a
// per-channel gain and offset.
template <typename T>
class FeatureMapNorm {
 public:
  FeatureMapNorm() = default;
  FeatureMapNorm(ParameterStore<T>& store, const std::string& name, std::int64_t channels);
  Tensor<T> operator()(const Tensor<T>& x) const;

  Tensor<T> gain;    // (1, C, 1, 1)
  Tensor<T> offset;  // (1, C, 1, 1)
};

}  // namespace ctiqa::nn
