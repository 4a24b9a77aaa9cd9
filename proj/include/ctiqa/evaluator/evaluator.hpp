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
#include <functional>
#include <string>
#include <vector>

#include "ctiqa/common/image.hpp"
#include "ctiqa/nn/module.hpp"
#include "ctiqa/nn/optim.hpp"
#include "ctiqa/nn/tensor.hpp"

namespace ctiqa::evaluator {

using nn::Tensor;

struct BackboneConfig {
  std::int64_t image_size = 32;
  std::int64_t in_channels = 3;
  std::int64_t patch_size = 8;
  std::int64_t embed_dim = 64;
  std::int64_t depth = 8;
  std::int64_t n_heads = 4;
  std::int64_t mlp_ratio = 4;
  std::vector<std::int64_t> tap_layers{4, 5, 6, 7};

  std::int64_t grid() const { return image_size / patch_size; }
  // Throws InvalidArgument.
  void validate() const;
};

enum class AttentionScale { kSpatial, kSqrtSpatial };
enum class HeadMode { kNormalized, kLiteralSum };

struct EvaluatorConfig {
  std::int64_t stages = 2;
  std::int64_t attention_blocks = 2;
  std::int64_t swin_dim = 64;
  std::int64_t swin_heads = 4;
  std::int64_t swin_window = 4;
  std::int64_t swin_mlp_ratio = 4;
  double residual_scale = 0.8;
  std::int64_t head_hidden = 64;
  AttentionScale attention_scale = AttentionScale::kSpatial;
  HeadMode head_mode = HeadMode::kNormalized;
};

// Multi-head self-attention over (B, N, C) token sets. `mask`, when defined,
// is added to the logits and must broadcast against (B / M, M, heads, N, N)
// with M = mask.dim(0), i.e. it has shape (M, 1, N, N).
template <typename T>
class MultiHeadAttention {
 public:
  MultiHeadAttention() = default;
  MultiHeadAttention(nn::ParameterStore<T>& store, const std::string& name, std::int64_t dim,
                     std::int64_t heads, Rng& rng);
  Tensor<T> operator()(const Tensor<T>& x, const Tensor<T>& mask = {}) const;

 private:
  nn::Linear<T> qkv_, proj_;
  std::int64_t dim_ = 0;
  std::int64_t heads_ = 1;
};

template <typename T>
class Mlp {
 public:
  Mlp() = default;
  Mlp(nn::ParameterStore<T>& store, const std::string& name, std::int64_t dim,
      std::int64_t hidden, Rng& rng);
  Tensor<T> operator()(const Tensor<T>& x) const { return fc2_(nn::gelu(fc1_(x))); }

 private:
  nn::Linear<T> fc1_, fc2_;
};

// Pre-norm transformer encoder layer on (B, N, C).
template <typename T>
class EncoderLayer {
 public:
  EncoderLayer() = default;
  EncoderLayer(nn::ParameterStore<T>& store, const std::string& name, std::int64_t dim,
               std::int64_t heads, std::int64_t mlp_ratio, Rng& rng);
  Tensor<T> operator()(const Tensor<T>& x) const;

 private:
  nn::LayerNorm<T> norm1_, norm2_;
  MultiHeadAttention<T> attn_;
  Mlp<T> mlp_;
};

// Patch embedding, learned positions, encoder stack. Returns the tapped
// layers' token grids concatenated along channels in ascending layer order:
// (B, taps * embed_dim, grid, grid).
template <typename T>
class VitBackbone {
 public:
  VitBackbone() = default;
  VitBackbone(nn::ParameterStore<T>& store, const std::string& name, const BackboneConfig& cfg,
              Rng& rng);
  Tensor<T> operator()(const Tensor<T>& x) const;
  // Output of every encoder layer as (B, N, C); used by tests.
  std::vector<Tensor<T>> layer_outputs(const Tensor<T>& x) const;
  const EncoderLayer<T>& layer(std::size_t i) const { return layers_[i]; }

 private:
  BackboneConfig cfg_;
  nn::Conv2d<T> patch_embed_;
  Tensor<T> position_;
  std::vector<EncoderLayer<T>> layers_;
};

// Channel-by-channel attention on (B, C, H, W): projections act on the
// flattened spatial axis, the attention map is C x C, and the block output is
// W_p(A V) + X.
template <typename T>
class TransposedAttention {
 public:
  TransposedAttention() = default;
  TransposedAttention(nn::ParameterStore<T>& store, const std::string& name,
                      std::int64_t spatial, Rng& rng,
                      AttentionScale scale = AttentionScale::kSpatial);
  Tensor<T> operator()(const Tensor<T>& x) const;
  // Attention map (B, C, C) for inspection.
  Tensor<T> attention_map(const Tensor<T>& x) const;

  nn::Linear<T> query, key, value, out;

 private:
  std::int64_t spatial_ = 0;
  AttentionScale scale_ = AttentionScale::kSpatial;
};

// Additive mask (nW, 1, N, N) for shifted windows on an (H, W) grid: 0 where
// two tokens came from the same region before the cyclic shift, -100 where not.
template <typename T>
Tensor<T> shifted_window_mask(std::int64_t height, std::int64_t width, std::int64_t window,
                              std::int64_t shift);

// Swin layer on (B, H, W, C) tokens; shift = 0 for plain windows.
template <typename T>
class SwinLayer {
 public:
  SwinLayer() = default;
  SwinLayer(nn::ParameterStore<T>& store, const std::string& name, std::int64_t dim,
            std::int64_t heads, std::int64_t window, std::int64_t shift,
            std::int64_t mlp_ratio, Rng& rng);
  Tensor<T> operator()(const Tensor<T>& x) const;

 private:
  nn::LayerNorm<T> norm1_, norm2_;
  MultiHeadAttention<T> attn_;
  Mlp<T> mlp_;
  std::int64_t window_ = 0;
  std::int64_t shift_ = 0;
};

// Two Swin layers (second one shifted by window / 2), a 3x3 convolution, and
// F_out = scale * conv(layers(F)) + F on (B, C, H, W).
template <typename T>
class ScaleSwinBlock {
 public:
  ScaleSwinBlock() = default;
  ScaleSwinBlock(nn::ParameterStore<T>& store, const std::string& name, std::int64_t dim,
                 std::int64_t heads, std::int64_t window, std::int64_t mlp_ratio, double scale,
                 Rng& rng);
  Tensor<T> operator()(const Tensor<T>& x) const;

  nn::Conv2d<T> conv;

 private:
  SwinLayer<T> first_, second_;
  double scale_ = 0.8;
  std::int64_t window_ = 0;
};

template <typename T>
struct HeadOutput {
  Tensor<T> score;          // (B)
  Tensor<T> patch_scores;   // (B, P)
  Tensor<T> patch_weights;  // (B, P)
};

// Combines per-patch scores and weights. Normalized: sum(s w) / sum(w) per
// item, AllZeroWeights when sum(w) < 1e-8. Literal: sum(s w).
template <typename T>
Tensor<T> aggregate_patches(const Tensor<T>& scores, const Tensor<T>& weights, HeadMode mode);

// Dual-branch patch head on (B, C, H, W).
template <typename T>
class PredictionHead {
 public:
  PredictionHead() = default;
  PredictionHead(nn::ParameterStore<T>& store, const std::string& name, std::int64_t dim,
                 std::int64_t hidden, HeadMode mode, Rng& rng);
  HeadOutput<T> operator()(const Tensor<T>& x) const;

 private:
  nn::Linear<T> score1_, score2_, weight1_, weight2_;
  HeadMode mode_ = HeadMode::kNormalized;
};

template <typename T>
class QualityEvaluator {
 public:
  QualityEvaluator(const BackboneConfig& backbone, const EvaluatorConfig& config,
                   std::uint64_t seed);

  // x (B, in_channels, image_size, image_size) -> scores (B).
  Tensor<T> operator()(const Tensor<T>& x) const { return forward(x).score; }
  HeadOutput<T> forward(const Tensor<T>& x) const;
  // Backbone features before the stages, (B, taps * embed_dim, grid, grid).
  Tensor<T> features(const Tensor<T>& x) const { return backbone_(x); }

  nn::ParameterStore<T>& store() { return store_; }
  const nn::ParameterStore<T>& store() const { return store_; }
  const BackboneConfig& backbone_config() const { return backbone_cfg_; }
  const EvaluatorConfig& config() const { return config_; }

 private:
  BackboneConfig backbone_cfg_;
  EvaluatorConfig config_;
  nn::ParameterStore<T> store_;
  VitBackbone<T> backbone_;
  std::vector<std::vector<TransposedAttention<T>>> attention_;
  std::vector<nn::Conv2d<T>> reduce_;
  std::vector<ScaleSwinBlock<T>> swin_;
  PredictionHead<T> head_;
};

struct LabeledSet {
  std::vector<Image> inputs;  // channel-minor, image_size x image_size x in_channels
  std::vector<double> labels;
  std::vector<std::string> ids;

  std::size_t size() const { return inputs.size(); }
};

struct EvaluatorTrainConfig {
  double lr = 1e-5;
  double lr_min = 0.0;
  double weight_decay = 1e-5;
  std::int64_t epochs = 10;
  std::int64_t batch = 8;
  std::uint64_t seed = 0;
};

struct EpochRecord {
  std::int64_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  double val_plcc = 0.0;  // NaN when undefined (fewer than 3 items or constant)
  double val_srocc = 0.0;
};

// Called after every epoch; returning false stops training early (the
// learning-rate schedule still spans config.epochs).
using EpochCallback = std::function<bool(const EpochRecord&)>;

// Runs epochs start_epoch+1 .. config.epochs. The shuffle of epoch e is drawn
// from a stream keyed by (seed, e) and the learning rate follows a cosine
// over all steps, so resuming after an epoch reproduces an uninterrupted run.
std::vector<EpochRecord> train_evaluator(QualityEvaluator<float>& model, const LabeledSet& train,
                                         const LabeledSet& validation,
                                         const EvaluatorTrainConfig& config,
                                         std::int64_t start_epoch = 0,
                                         const EpochCallback& on_epoch = {});

std::vector<double> predict_scores(const QualityEvaluator<float>& model,
                                   const std::vector<Image>& inputs, std::int64_t batch = 32);

std::string epoch_trace_csv(const std::vector<EpochRecord>& trace);

}  // namespace ctiqa::evaluator
