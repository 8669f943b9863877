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

// Dataset records and perturbation records, with their JSONL encodings.
//
// Input dataset line:  {"id", "text", "label", "lang"}
//   label is optional (null or absent for unlabeled data); lang is "en" or
//   "zh".
// PerturbedRecord line: {"id", "source_id", "original_text",
//   "perturbed_text", "kind", "shift_labels"}
//   kind is robust_low | robust_medium | robust_high | monotonic;
//   shift_labels maps every class to -1, 0 or +1 and is present only for
//   monotonic records.

#ifndef FRC_PERTURB_RECORD_H_
#define FRC_PERTURB_RECORD_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace frc {

struct DatasetRecord {
  std::string id;
  std::string text;
  std::optional<std::string> label;
  std::string lang = "en";

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

enum class PerturbKind { kRobustLow, kRobustMedium, kRobustHigh, kMonotonic };

std::string_view perturb_kind_name(PerturbKind kind);
// Throws InvalidArgument for an unknown name.
PerturbKind parse_perturb_kind(std::string_view name);

using ShiftLabels = std::map<std::string, int>;

struct PerturbedRecord {
  std::string id;
  std::string source_id;
  std::string original_text;
  std::string perturbed_text;
  PerturbKind kind = PerturbKind::kRobustLow;
  std::optional<ShiftLabels> shift_labels;

  // Empty when the record obeys its kind's contract, else the reason.
  std::string check() const;

  friend bool operator==(const PerturbedRecord&,
                         const PerturbedRecord&) = default;
};

nlohmann::json to_json(const DatasetRecord& record);
DatasetRecord dataset_record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PerturbedRecord& record);
PerturbedRecord perturbed_record_from_json(const nlohmann::json& j);

// Line-oriented readers. Blank lines are skipped; a malformed line throws
// InvalidArgument naming the file and line number.
std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path);
std::vector<PerturbedRecord> read_perturbed(const std::filesystem::path& path);
void write_perturbed(const std::vector<PerturbedRecord>& records,
                     const std::filesystem::path& path);

// One parsed object per non-blank line.
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::vector<nlohmann::json>& lines,
                 const std::filesystem::path& path);

}  // namespace frc

#endif  // FRC_PERTURB_RECORD_H_
