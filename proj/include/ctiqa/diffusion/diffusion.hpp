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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ctiqa/common/image.hpp"
#include "ctiqa/nn/convert.hpp"
#include "ctiqa/nn/module.hpp"
#include "ctiqa/nn/optim.hpp"
#include "ctiqa/nn/tensor.hpp"

namespace ctiqa::diffusion {

using nn::Tensor;

// Tables indexed by step t in [1, T]; stored at t - 1.
struct DiffusionSchedule {
  std::int64_t steps = 0;
  std::vector<double> beta;
  std::vector<double> alpha;
  std::vector<double> alpha_bar;
  std::vector<double> sigma2;
  // Analytic per-step weight of the noise-prediction objective; 1 at t = 1
  // where sigma2 vanishes.
  std::vector<double> loss_weight;

  // Throws StepOutOfRange unless 1 <= t <= T.
  void check_step(std::int64_t t) const;
  double beta_at(std::int64_t t) const;
  double alpha_at(std::int64_t t) const;
  // Accepts t = 0, where the product is empty and equals 1.
  double alpha_bar_at(std::int64_t t) const;
  double sigma2_at(std::int64_t t) const;
  double loss_weight_at(std::int64_t t) const;
};

// Linear betas from beta_start to beta_end inclusive.
DiffusionSchedule make_schedule(std::int64_t steps, double beta_start, double beta_end);
DiffusionSchedule schedule_from_betas(std::vector<double> betas);

enum class PosteriorForm { kX0, kEps };
enum class LossWeighting { kSimple, kAnalytic };

// Tensors are (B, C, H, W). `t` holds one step per batch item, or a single
// step shared by the whole batch.
template <typename T>
Tensor<T> q_sample(const Tensor<T>& x0, std::span<const std::int64_t> t, const Tensor<T>& eps,
                   const DiffusionSchedule& sched);
template <typename T>
Tensor<T> q_sample(const Tensor<T>& x0, std::int64_t t, const Tensor<T>& eps,
                   const DiffusionSchedule& sched) {
  return q_sample(x0, std::span<const std::int64_t>(&t, 1), eps, sched);
}

// One step of the forward chain: sqrt(alpha_t) x + sqrt(beta_t) eps.
template <typename T>
Tensor<T> forward_step(const Tensor<T>& x_prev, std::int64_t t, const Tensor<T>& eps,
                       const DiffusionSchedule& sched);

template <typename T>
Tensor<T> posterior_mean(const Tensor<T>& x_t, const Tensor<T>& x0_or_eps, std::int64_t t,
                         PosteriorForm form, const DiffusionSchedule& sched);

// x_{t-1} from x_t, the predicted noise and z. `z` may be undefined (z = 0).
template <typename T>
Tensor<T> reverse_step(const Tensor<T>& x_t, const Tensor<T>& eps_pred, std::int64_t t,
                       const Tensor<T>& z, const DiffusionSchedule& sched);

struct DenoiserSpec {
  std::string kind = "tiny-unet";  // tiny-unet | oracle | baseline-regressor
  std::int64_t image_channels = 1;
  std::int64_t condition_channels = 1;
  std::int64_t base_width = 32;
  std::int64_t depth = 2;
  std::int64_t time_embed_dim = 32;

  std::int64_t channels_in() const { return image_channels + condition_channels; }
};

// Noise predictor D(x_t, y, t).
template <typename T>
class Denoiser {
 public:
  virtual ~Denoiser() = default;
  virtual Tensor<T> predict(const Tensor<T>& x_t, const Tensor<T>& y,
                            std::span<const std::int64_t> t) const = 0;
  virtual const DenoiserSpec& spec() const = 0;
};

// Sinusoidal embedding of integer steps, (B, dim).
template <typename T>
Tensor<T> timestep_embedding(std::span<const std::int64_t> t, std::int64_t dim);

template <typename T>
class ConvBlock {
 public:
  ConvBlock() = default;
  ConvBlock(nn::ParameterStore<T>& store, const std::string& name, std::int64_t in,
            std::int64_t out, std::int64_t embed_dim, Rng& rng);
  // temb is the shared (B, E) time embedding.
  Tensor<T> operator()(const Tensor<T>& x, const Tensor<T>& temb) const;

 private:
  nn::Conv2d<T> conv1_, conv2_;
  nn::Linear<T> time_;
  nn::FeatureMapNorm<T> norm1_, norm2_;
  std::int64_t out_ = 0;
};

// Conditional U-Net: input is x_t concatenated with y along channels, output
// has the channels of x_t. Spatial sizes must be divisible by 2^(depth-1).
template <typename T>
class TinyUNet : public Denoiser<T> {
 public:
  TinyUNet(const DenoiserSpec& spec, std::uint64_t seed);

  Tensor<T> predict(const Tensor<T>& x_t, const Tensor<T>& y,
                    std::span<const std::int64_t> t) const override;
  const DenoiserSpec& spec() const override { return spec_; }
  nn::ParameterStore<T>& store() { return store_; }
  const nn::ParameterStore<T>& store() const { return store_; }

 private:
  DenoiserSpec spec_;
  nn::ParameterStore<T> store_;
  nn::Linear<T> embed_;
  nn::Conv2d<T> in_conv_, out_conv_;
  std::vector<ConvBlock<T>> down_blocks_, up_blocks_;
  std::vector<nn::Conv2d<T>> downsample_, upsample_;
  ConvBlock<T> middle_;
};

// Test double that knows x0 and returns the exact noise implied by x_t,
// plus a constant offset.
template <typename T>
class OracleDenoiser : public Denoiser<T> {
 public:
  OracleDenoiser(Tensor<T> x0, const DiffusionSchedule& sched, T offset = T(0));
  Tensor<T> predict(const Tensor<T>& x_t, const Tensor<T>& y,
                    std::span<const std::int64_t> t) const override;
  const DenoiserSpec& spec() const override { return spec_; }

 private:
  Tensor<T> x0_;
  const DiffusionSchedule* sched_;
  T offset_;
  DenoiserSpec spec_;
};

// Mean over pixels and batch of w_t * (eps - D(q_sample(x0, t, eps), y, t))^2.
template <typename T>
Tensor<T> ddpm_loss(const Denoiser<T>& denoiser, const Tensor<T>& x0, const Tensor<T>& y,
                    std::span<const std::int64_t> t, const Tensor<T>& eps,
                    const DiffusionSchedule& sched, LossWeighting weighting);

// Paired normalized images: x0 = reference, y = distorted.
struct PairDataset {
  std::vector<Image> x0;
  std::vector<Image> y;

  std::size_t size() const { return x0.size(); }
  // Throws EmptyDataset / ShapeMismatch.
  void validate() const;
};

// Draws a batch of random crops (crop <= 0 keeps the full image). Returns
// x0 and y as (B, 1, crop, crop).
std::pair<Tensor<float>, Tensor<float>> sample_batch(const PairDataset& data, std::int64_t batch,
                                                     std::int64_t crop, Rng& rng);

struct DdpmTrainConfig {
  double lr = 1e-4;
  std::int64_t iters = 1000;
  std::int64_t batch = 8;
  std::int64_t crop = 0;
  std::uint64_t seed = 0;
  LossWeighting weighting = LossWeighting::kSimple;
};

// Called after every iteration with (iteration, loss); the iteration count
// is 1-based. Returning false stops training after that iteration.
using IterationCallback = std::function<bool(std::int64_t, double)>;

// Runs iterations start_iter+1 .. config.iters. Each iteration draws its batch,
// steps and noise from an RNG keyed by (seed, iteration), so a run resumed
// from a checkpoint taken after iteration k reproduces the uninterrupted run.
std::vector<double> train_ddpm(const PairDataset& data, TinyUNet<float>& model,
                               const DiffusionSchedule& sched, const DdpmTrainConfig& config,
                               std::int64_t start_iter = 0,
                               const IterationCallback& on_iteration = {});

std::string loss_trace_csv(std::span<const double> trace, std::int64_t first_iter = 1);

// Reverse chain from x_start at step t_start down to x_0. Item b of the batch
// draws z from the stream seeded by seeds[b]; with stochastic = false every z
// is zero. No clamping is applied.
template <typename T>
Tensor<T> run_reverse_chain(const Denoiser<T>& denoiser, const Tensor<T>& x_start,
                            const Tensor<T>& y, std::int64_t t_start,
                            const DiffusionSchedule& sched, std::span<const std::uint64_t> seeds,
                            bool stochastic = true);

// Primary content for a batch of conditions y (B, C, H, W): x_T ~ N(0, I)
// drawn from seeds[b], T reverse steps, then a clamp to [0, 1]. The result for
// an item depends only on its seed and condition, not on the batch it is in.
template <typename T>
Tensor<T> sample_primary(const Denoiser<T>& denoiser, const Tensor<T>& y,
                         const DiffusionSchedule& sched, std::span<const std::uint64_t> seeds);

Image sample_primary(const Denoiser<float>& denoiser, const Image& y,
                     const DiffusionSchedule& sched, std::uint64_t seed);

// One-shot regression denoiser: y + f(y) with a small conv net f.
template <typename T>
class BaselineRegressor {
 public:
  BaselineRegressor(const DenoiserSpec& spec, std::uint64_t seed);
  Tensor<T> forward(const Tensor<T>& y) const;
  const DenoiserSpec& spec() const { return spec_; }
  nn::ParameterStore<T>& store() { return store_; }
  const nn::ParameterStore<T>& store() const { return store_; }

 private:
  DenoiserSpec spec_;
  nn::ParameterStore<T> store_;
  std::vector<nn::Conv2d<T>> convs_;
};

struct BaselineTrainConfig {
  double lr = 1e-3;
  std::int64_t iters = 500;
  std::int64_t batch = 8;
  std::int64_t crop = 0;
  std::uint64_t seed = 0;
};

std::vector<double> train_baseline(const PairDataset& data, BaselineRegressor<float>& model,
                                   const BaselineTrainConfig& config);

using nn::images_to_tensor;
using nn::tensor_to_images;

}  // namespace ctiqa::diffusion
