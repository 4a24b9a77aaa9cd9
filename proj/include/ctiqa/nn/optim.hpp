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

#include "ctiqa/nn/module.hpp"

namespace ctiqa::nn {

// Adam with decoupled weight decay.
struct AdamConfig {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;
};

template <typename T>
class Adam {
 public:
  explicit Adam(AdamConfig config = {}) : config_(config) {}

  // One update of every parameter at learning rate `lr`; increments each
  // parameter's step counter by one.
  void step(ParameterStore<T>& store, double lr) const;
  void step(ParameterStore<T>& store) const { step(store, config_.lr); }

  const AdamConfig& config() const { return config_; }

 private:
  AdamConfig config_;
};

// Cosine annealing from lr_max at step 0 to lr_min at step total_steps.
double cosine_lr(std::int64_t step, std::int64_t total_steps, double lr_max, double lr_min);

}  // namespace ctiqa::nn
