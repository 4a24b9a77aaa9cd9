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
#include <string_view>

namespace ctiqa {

namespace fs = std::filesystem;

// Writes to `<path>.tmp` and renames over `path`, so readers never observe a
// partial file. Creates parent directories. Throws IoError.
void atomic_write_file(const fs::path& path, std::string_view bytes);

// Throws IoError when the file cannot be read.
std::string read_file(const fs::path& path);

// 64-bit FNV-1a; stable content hash for provenance records.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t value);

void append_le_u32(std::string& out, std::uint32_t v);
void append_le_u64(std::string& out, std::uint64_t v);
void append_le_f32(std::string& out, float v);
std::uint32_t read_le_u32(std::string_view bytes, std::size_t offset);
std::uint64_t read_le_u64(std::string_view bytes, std::size_t offset);
float read_le_f32(std::string_view bytes, std::size_t offset);

}  // namespace ctiqa
