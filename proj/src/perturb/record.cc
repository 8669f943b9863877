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

#include "frc/perturb/record.h"

#include <fstream>
#include <string>

#include "frc/core/error.h"

namespace frc {
namespace {

using nlohmann::json;

constexpr std::string_view kKindNames[] = {"robust_low", "robust_medium",
                                           "robust_high", "monotonic"};

}  // namespace

std::string_view perturb_kind_name(PerturbKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

PerturbKind parse_perturb_kind(std::string_view name) {
  for (int k = 0; k < 4; ++k) {
    if (kKindNames[k] == name) return static_cast<PerturbKind>(k);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown perturbation kind '" + std::string(name) + "'");
}

std::string PerturbedRecord::check() const {
  if (kind != PerturbKind::kMonotonic) {
    return shift_labels ? "robustness record carries shift labels" : "";
  }
  if (!shift_labels || shift_labels->empty()) {
    return "monotonic record without shift labels";
  }
  bool moved = false;
  for (const auto& [cls, y] : *shift_labels) {
    if (y < -1 || y > 1) return "shift label for " + cls + " out of {-1,0,1}";
    moved = moved || y != 0;
  }
  if (moved && perturbed_text == original_text) {
    return "monotonic record with a nonzero label leaves the text unchanged";
  }
  return "";
}

json to_json(const DatasetRecord& record) {
  json j = {{"id", record.id}, {"text", record.text}, {"lang", record.lang}};
  j["label"] = record.label ? json(*record.label) : json(nullptr);
  return j;
}

DatasetRecord dataset_record_from_json(const json& j) {
  DatasetRecord r;
  if (j.contains("id") && j["id"].is_number_integer()) {
    r.id = std::to_string(j["id"].get<long long>());
  } else {
    r.id = j.at("id").get<std::string>();
  }
  r.text = j.at("text").get<std::string>();
  if (j.contains("label") && !j["label"].is_null()) {
    r.label = j["label"].get<std::string>();
  }
  r.lang = j.value("lang", "en");
  if (r.lang != "en" && r.lang != "zh") {
    throw Error(ErrorCode::kInvalidArgument,
                "record " + r.id + ": lang must be en or zh, got " + r.lang);
  }
  return r;
}

json to_json(const PerturbedRecord& record) {
  json j = {{"id", record.id},
            {"source_id", record.source_id},
            {"original_text", record.original_text},
            {"perturbed_text", record.perturbed_text},
            {"kind", perturb_kind_name(record.kind)}};
  if (record.shift_labels) j["shift_labels"] = *record.shift_labels;
  return j;
}

PerturbedRecord perturbed_record_from_json(const json& j) {
  PerturbedRecord r;
  r.id = j.at("id").get<std::string>();
  r.source_id = j.at("source_id").get<std::string>();
  r.original_text = j.at("original_text").get<std::string>();
  r.perturbed_text = j.at("perturbed_text").get<std::string>();
  r.kind = parse_perturb_kind(j.at("kind").get<std::string>());
  if (j.contains("shift_labels") && !j["shift_labels"].is_null()) {
    r.shift_labels = j["shift_labels"].get<ShiftLabels>();
  }
  if (std::string why = r.check(); !why.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "record " + r.id + ": " + why);
  }
  return r;
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<json> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object()) {
      throw Error(ErrorCode::kInvalidArgument,
                  path.string() + ":" + std::to_string(number) +
                      ": not a JSON object");
    }
    out.push_back(std::move(j));
  }
  return out;
}

void write_jsonl(const std::vector<json>& lines,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  for (const auto& j : lines) out << j.dump() << '\n';
}

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path) {
  std::vector<DatasetRecord> out;
  for (const auto& j : read_jsonl(path)) {
    try {
      out.push_back(dataset_record_from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  path.string() + ": bad dataset record: " + e.what());
    }
  }
  return out;
}

std::vector<PerturbedRecord> read_perturbed(const std::filesystem::path& path) {
  std::vector<PerturbedRecord> out;
  for (const auto& j : read_jsonl(path)) {
    try {
      out.push_back(perturbed_record_from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  path.string() + ": bad perturbed record: " + e.what());
    }
  }
  return out;
}

void write_perturbed(const std::vector<PerturbedRecord>& records,
                     const std::filesystem::path& path) {
  std::vector<json> lines;
  lines.reserve(records.size());
  for (const auto& r : records) lines.push_back(to_json(r));
  write_jsonl(lines, path);
}

}  // namespace frc
