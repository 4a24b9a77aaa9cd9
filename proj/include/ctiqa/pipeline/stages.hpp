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
#include <functional>
#include <string>
#include <vector>

#include "ctiqa/ctsim/ctsim.hpp"
#include "ctiqa/evaluator/evaluator.hpp"
#include "ctiqa/metrics/metrics.hpp"
#include "ctiqa/pipeline/config.hpp"

namespace ctiqa::pipeline {

namespace fs = std::filesystem;

using Logger = std::function<void(const std::string&)>;

// Artifact directories under config.out_dir.
struct Layout {
  fs::path root;
  fs::path dataset;
  fs::path ddpm;
  fs::path primary;
  fs::path dissim;
  fs::path evaluator(Ablation a) const { return root / ("evaluator-" + ablation_name(a)); }
  fs::path evaluation(Ablation a) const { return root / ("evaluation-" + ablation_name(a)); }
};
Layout layout(const ExperimentConfig& config);

// Phantom-level split: a seeded shuffle of phantom indices, the first
// round(test_fraction * N) of which form the test split. Lists are sorted.
struct Split {
  std::vector<std::int64_t> train;
  std::vector<std::int64_t> test;
  bool is_test(std::int64_t phantom) const;
};
Split split_phantoms(const ExperimentConfig& config);

// Stage config hashes; each includes its upstream hashes.
std::string dataset_hash(const ExperimentConfig& config);
std::string ddpm_hash(const ExperimentConfig& config);
std::string primary_hash(const ExperimentConfig& config);
std::string dissim_hash(const ExperimentConfig& config);
std::string evaluator_hash(const ExperimentConfig& config, Ablation ablation);

struct StageOptions {
  bool force = false;        // discard any existing artifact and recompute
  std::int64_t stop_after = 0;  // training stages: stop after this iteration/epoch (0 = run to end)
  Logger log;
};

// Every stage is idempotent: a completed artifact whose provenance hash
// matches the config is left untouched. Missing or incomplete upstream
// artifacts raise MissingArtifact; upstream artifacts built from a different
// config raise ProvenanceMismatch.
void run_simulate(const ExperimentConfig& config, const StageOptions& options = {});

// Trains on the train split's (reference, distorted) pairs. Checkpoints with
// optimizer state every ddpm.checkpoint_every iterations and resumes from the
// last one. Returns the full loss trace (one entry per iteration so far).
std::vector<double> run_train_ddpm(const ExperimentConfig& config, const StageOptions& options = {});

// Samples primary content for every distorted image and writes
// primary/quality.csv with SSIM-to-reference of the input and the output.
void run_infer_primary(const ExperimentConfig& config, const StageOptions& options = {});

void run_dissim(const ExperimentConfig& config, const StageOptions& options = {});

// Trains the evaluator for the ablation's input mode; the test split serves
// as the monitoring set for per-epoch validation metrics (no model selection).
std::vector<evaluator::EpochRecord> run_train_evaluator(const ExperimentConfig& config,
                                                        Ablation ablation,
                                                        const StageOptions& options = {});

struct QualityRecord {
  std::string image_id;
  std::string condition;
  double proxy_mos = 0.0;
  double predicted_score = 0.0;
  std::string split_tag;
};

struct Evaluation {
  std::vector<QualityRecord> records;
  metrics::Summary summary;
};

// Scores one split ("train" or "test") and writes records_<split>.csv,
// summary_<split>.csv and scatter_<split>.dat. Throws ProvenanceMismatch when
// the evaluator checkpoint was not trained on this dataset and config.
Evaluation run_evaluate(const ExperimentConfig& config, Ablation ablation,
                        const std::string& split_tag, const StageOptions& options = {});

std::string records_csv(const std::vector<QualityRecord>& records);
std::vector<QualityRecord> parse_records_csv(const std::string& text);
// "# proxy_mos predicted_score" then one "x y" line per record.
std::string scatter_dat(const std::vector<QualityRecord>& records);

std::string condition_tag(double dose_fraction, std::int64_t n_views);

}  // namespace ctiqa::pipeline
