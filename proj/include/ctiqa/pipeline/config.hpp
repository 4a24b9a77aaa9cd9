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

#include "ctiqa/ctsim/ctsim.hpp"
#include "ctiqa/diffusion/diffusion.hpp"
#include "ctiqa/dissim/dissim.hpp"
#include "ctiqa/evaluator/evaluator.hpp"
#include "json.hpp"

namespace ctiqa::pipeline {

enum class Ablation { kDBiqa, kManiqa };

// "d-biqa" | "maniqa" (also accepts "maniqa-ablation"). Throws ConfigError.
Ablation parse_ablation(const std::string& name);
std::string ablation_name(Ablation ablation);

struct DdpmSection {
  std::int64_t steps = 200;
  double beta_start = 1e-4;
  double beta_end = 0.02;
  diffusion::DenoiserSpec denoiser;
  diffusion::DdpmTrainConfig train;
  std::int64_t checkpoint_every = 250;
  // Items sampled together in one reverse-chain batch.
  std::int64_t sample_batch = 12;
};

struct DissimSection {
  dissim::SsimParams ssim;
  dissim::AssembleConfig assemble;
};

struct EvaluatorSection {
  evaluator::BackboneConfig backbone;
  evaluator::EvaluatorConfig model;
  evaluator::EvaluatorTrainConfig train;
};

struct SplitSection {
  double train_fraction = 0.9;
  double test_fraction = 0.1;
  std::uint64_t seed = 7;
};

// Every knob of one experiment. Stage seeds are derived from `seed`, which
// also seeds the simulator.
struct ExperimentConfig {
  std::uint64_t seed = 2024;
  std::filesystem::path out_dir = "runs/default";
  Ablation ablation = Ablation::kDBiqa;
  ctsim::SimConfig sim;
  DdpmSection ddpm;
  DissimSection dissim;
  EvaluatorSection evaluator;
  SplitSection split;

  // Throws ConfigError.
  void validate() const;
};

// Reads a TOML file (a .json extension selects JSON). Keys missing from the
// file keep their defaults; unknown keys are errors. Throws ConfigError, and
// IoError when the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_toml(std::string_view text);
ExperimentConfig parse_json(std::string_view text);

// Fully resolved config as JSON (sections sim, ddpm, dissim, evaluator, split).
nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig from_json(const nlohmann::json& j);

// Section JSON that stage hashes are computed from.
nlohmann::json section_json(const ExperimentConfig& config, const std::string& section);

}  // namespace ctiqa::pipeline
