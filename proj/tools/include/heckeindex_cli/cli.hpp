// Copyright 2026 The heckeindex Authors
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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace heckeindex::cli {

enum class OutputFormat { kJson, kCsv, kDot, kText };

const char* format_name(OutputFormat format);

struct RunConfig {
  double tol = 1e-9;
  double epsilon_witness = 1e-6;
  // Power fast path bound and breadth-first letter bound.
  std::int64_t max_power = 1'000'000;
  int max_bfs_length = 14;
  int n_max = 100;
  int depth_cap = 12;
  OutputFormat output_format = OutputFormat::kJson;
  int threads = 1;
};

/// Reads a JSON config whose keys mirror RunConfig; unknown keys are an error.
/// "max_word_len" is either an integer (power bound) or {"power", "bfs"}.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

// Throws a usage-level error if a field is not positive, and
// ToleranceConfigError if tol cannot separate the discrete points up to n_max.
void validate(const RunConfig& config);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInternal = 4;

struct CommandResult {
  int exit_code = kExitOk;
  std::string payload;
  std::vector<std::string> diagnostics;
};

/// Runs one command line; args exclude the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace heckeindex::cli
