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

#ifndef FRC_CLI_COMMANDS_H_
#define FRC_CLI_COMMANDS_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frc/backends/backend.h"
#include "frc/cli/config.h"

namespace frc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;    // configuration or unrecoverable
inline constexpr int kExitPartial = 2;  // some records failed

std::unique_ptr<Backend> make_backend(const RunConfig& config);

// Writes traces_<method>.jsonl and labels_<method>.jsonl per configured
// method. With `text`, that single text is analyzed and each trace is also
// printed to stdout.
int cmd_analyze(const RunConfig& config,
                const std::optional<std::string>& text = std::nullopt);

// Writes perturbed.jsonl: one record per (dataset record, kind).
int cmd_perturb(const RunConfig& config);

// Scores every configured method on the dataset and the perturbed set,
// reusing traces from `traces` files and running the backend for texts
// they do not cover. Writes report.json and report.txt and prints the
// table.
int cmd_evaluate(const RunConfig& config,
                 const std::vector<std::filesystem::path>& traces = {});

// Runs FRC on the dataset under four injection configurations (none,
// keyword, subunit, keyword+subunit) built from the teacher traces.
// Writes traces_transfer_<configuration>.jsonl and transfer_report.json.
int cmd_transfer(const RunConfig& config);

// Command-line entry point: frc <analyze|perturb|evaluate|transfer> ...
int run_cli(int argc, const char* const* argv);

}  // namespace frc

#endif  // FRC_CLI_COMMANDS_H_
