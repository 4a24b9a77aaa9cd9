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
#include <filesystem>
#include <string>

#include "ctiqa/nn/module.hpp"
#include "json.hpp"

namespace ctiqa::pipeline {

// Layout: "CTIQCK1\0", u64 LE header length, JSON header, then f32 LE blobs
// of every parameter in name order. With optimizer state, each parameter's
// Adam m and v follow in the same order. The header holds
//   {"format", "spec", "step", "optimizer", "tensors": [{name, shape, adam_step}]}.
void save_checkpoint(const std::filesystem::path& path, const nn::ParameterStore<float>& store,
                     const nlohmann::json& spec, std::int64_t step, bool with_optimizer);

std::string encode_checkpoint(const nn::ParameterStore<float>& store, const nlohmann::json& spec,
                              std::int64_t step, bool with_optimizer);

struct CheckpointHeader {
  nlohmann::json spec;
  std::int64_t step = 0;
  bool optimizer = false;
};

// Header only. Throws MissingArtifact when absent, IoError when malformed.
CheckpointHeader read_checkpoint_header(const std::filesystem::path& path);

// Restores parameters (and Adam state when stored) into a store built with
// the same architecture. Throws ProvenanceMismatch when names or shapes
// differ, MissingArtifact when absent, IoError when truncated.
CheckpointHeader load_checkpoint(const std::filesystem::path& path,
                                 nn::ParameterStore<float>& store);

}  // namespace ctiqa::pipeline
