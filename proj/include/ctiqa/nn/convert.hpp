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

#include <span>
#include <vector>

#include "ctiqa/common/image.hpp"
#include "ctiqa/nn/tensor.hpp"

namespace ctiqa::nn {

// Channel-minor images <-> (B, C, H, W). Images must share a shape.
Tensor<float> images_to_tensor(std::span<const Image> images);
std::vector<Image> tensor_to_images(const Tensor<float>& x);

}  // namespace ctiqa::nn
