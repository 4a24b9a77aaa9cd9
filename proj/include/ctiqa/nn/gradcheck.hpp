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

#include "ctiqa/nn/module.hpp"

namespace ctiqa::nn {

struct GradCheckReport {
  double max_relative_error = 0.0;
  // Location of the worst entry.
  std::size_t tensor_index = 0;
  std::int64_t element = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  std::int64_t entries_checked = 0;
};

// Compares reverse-mode gradients of the scalar function `f` with respect to
// every entry of `params` against central differences with step `eps`
// (64-bit). Error per entry: |a - n| / max(|a|, |n|, floor). The floor keeps
// structurally zero gradients (a bias under a softmax, say), where the
// finite difference is pure roundoff, from reading as relative error 1.
// Throws InvalidArgument for eps outside [1e-7, 1e-3], NonScalarOutput when
// f is not scalar, and NonFinite when probing produces NaN/Inf.
GradCheckReport gradient_check(const std::function<Tensor<double>()>& f,
                               std::vector<Tensor<double>> params, double eps = 1e-5,
                               double floor = 1e-5);

GradCheckReport gradient_check(const std::function<Tensor<double>()>& f,
                               ParameterStore<double>& store, double eps = 1e-5,
                               double floor = 1e-5);

}  // namespace ctiqa::nn
