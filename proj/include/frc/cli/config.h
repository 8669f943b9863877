// Copyright 2026 The FRC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration, stored as an INI file:
//
//   [backend]   kind = lexicon | http, lexicon, endpoint, model, temperature,
//               max_retries, timeout, concurrency, retry_backoff_ms
//   [classes]   names = positive,negative   include_other = false
//   [run]       methods = frc,cot,dp   seed   threshold   out
//   [data]      dataset, perturbed, synonyms, teacher_traces
//   [perturb]   kinds = robust_low,...   generator = deterministic | llm
//
// Relative paths resolve against the directory holding the file.

#ifndef FRC_CLI_CONFIG_H_
#define FRC_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frc/backends/http_backend.h"
#include "frc/core/types.h"

namespace frc {

struct RunConfig {
  std::string backend = "lexicon";  // lexicon | http
  std::filesystem::path lexicon;
  BackendConfig http;

  std::vector<std::string> class_names{"positive", "negative"};
  bool include_other = false;

  std::vector<std::string> methods{"frc"};
  std::uint64_t seed = 0;
  double threshold = 0.3;
  std::filesystem::path out = "frc_out";

  std::filesystem::path dataset;
  std::filesystem::path perturbed;
  std::filesystem::path synonyms;
  std::filesystem::path teacher_traces;

  std::vector<std::string> kinds{"robust_low", "robust_medium", "robust_high",
                                 "monotonic"};
  std::string generator = "deterministic";  // deterministic | llm

  ClassSet classes() const { return ClassSet(class_names, include_other); }

  // Throws ConfigError on unknown enumerations, bad numbers, or referenced
  // input files that do not exist.
  void validate() const;

  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

// Throws ConfigError when the file is missing or malformed.
RunConfig load_config(const std::filesystem::path& path);
void save_config(const RunConfig& config, const std::filesystem::path& path);
std::string config_to_ini(const RunConfig& config);

// Settings that shape results, with paths reduced to file names so the
// snapshot is stable across checkouts.
nlohmann::json config_summary(const RunConfig& config);

}  // namespace frc

#endif  // FRC_CLI_CONFIG_H_
