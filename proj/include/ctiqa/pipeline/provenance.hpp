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

#include "json.hpp"

namespace ctiqa::pipeline {

// Build version, "<project version>-g<commit>[-dirty]" when built from git.
std::string version_string();

// Hex FNV-1a of the compact dump of `j` (object keys are sorted).
std::string hash_json(const nlohmann::json& j);

// Record written next to every artifact as provenance.json. `config_hash`
// covers the stage's own settings and its upstream hashes, so a change
// anywhere up the chain changes every downstream hash.
struct Provenance {
  std::string stage;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string version;
  nlohmann::json upstream = nlohmann::json::object();  // stage -> config_hash
  bool complete = false;

  nlohmann::json to_json() const;
  static Provenance from_json(const nlohmann::json& j);
};

std::filesystem::path provenance_path(const std::filesystem::path& artifact_dir);
void write_provenance(const std::filesystem::path& artifact_dir, const Provenance& p);
// Throws MissingArtifact when absent, IoError when malformed.
Provenance read_provenance(const std::filesystem::path& artifact_dir);
// True when the directory holds a completed artifact with this hash.
bool artifact_current(const std::filesystem::path& artifact_dir, const std::string& config_hash);

}  // namespace ctiqa::pipeline
